#include "ringatlas/atlas.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ringatlas {

using nlohmann::json;

json ring_to_json(const FiniteRing& r) {
    json j;
    j["name"] = r.name();
    j["order"] = r.order();
    j["zero"] = r.zero();
    j["one"] = r.one();
    j["add"] = r.add_table();
    j["mul"] = r.mul_table();
    return j;
}

RingPtr ring_from_json(const json& j) {
    FiniteRing::Table add = j.at("add").get<FiniteRing::Table>();
    FiniteRing::Table mul = j.at("mul").get<FiniteRing::Table>();
    const std::size_t declared = j.at("order").get<std::size_t>();
    if (add.size() != declared)
        throw RingError({"order", {}, "declared order does not match table"});
    return make_validated(j.at("name").get<std::string>(), add, mul,
                          j.at("zero").get<Elem>(), j.at("one").get<Elem>());
}

json witness_to_json(const Witness& w) {
    json j;
    if (const auto* zp = std::get_if<ZeroPairWitness>(&w)) {
        j["f"] = zp->f;
        j["g"] = zp->g;
        j["violation"] = {{"i", zp->i}, {"j", zp->j}, {"product", zp->product}};
    } else if (const auto* ew = std::get_if<ElementWitness>(&w)) {
        j["elements"] = ew->elements;
        j["note"] = ew->note;
    } else if (const auto* tp = std::get_if<TowerPairWitness>(&w)) {
        j["p"] = tp->p;
        j["q"] = tp->q;
        j["violation"] = {{"i", tp->i}, {"j", tp->j}, {"product", tp->product}};
    }
    return j;
}

json report_to_json(const PropertyReport& rep, bool include_timing) {
    json j;
    j["property"] = rep.property;
    j["ring"] = rep.ring;
    j["twist"] = rep.twist;
    if (rep.degree_bound)
        j["degree_bound"] = {rep.degree_bound->first,
                             rep.degree_bound->second};
    else
        j["degree_bound"] = nullptr;
    j["verdict"] = to_string(rep.verdict);
    j["witness"] = rep.witness ? witness_to_json(*rep.witness) : json(nullptr);
    j["pairs_examined"] = rep.pairs_examined;
    if (include_timing) j["elapsed_seconds"] = rep.elapsed_seconds;
    return j;
}

RingPtr Atlas::find_ring(const std::string& name) const {
    for (const RingPtr& r : rings)
        if (r->name() == name) return r;
    return nullptr;
}

RingMap Atlas::resolve_map(const MapEntry& entry) const {
    RingPtr r = find_ring(entry.ring);
    if (!r) throw std::out_of_range("atlas: unknown ring " + entry.ring);
    return RingMap::verified(r, r, entry.images, entry.name);
}

json Atlas::to_json() const {
    json j;
    j["version"] = version;
    j["rings"] = json::array();
    for (const RingPtr& r : rings) j["rings"].push_back(ring_to_json(*r));
    j["maps"] = json::array();
    for (const MapEntry& m : maps)
        j["maps"].push_back(
            {{"ring", m.ring}, {"name", m.name}, {"images", m.images}});
    if (!reports.empty()) j["reports"] = reports;
    return j;
}

Atlas Atlas::from_json(const json& j) {
    Atlas a;
    a.version = j.value("version", 1);
    for (const json& rj : j.at("rings")) a.rings.push_back(ring_from_json(rj));
    if (j.contains("maps"))
        for (const json& mj : j.at("maps")) {
            MapEntry m;
            m.ring = mj.at("ring").get<std::string>();
            m.name = mj.value("name", "");
            m.images = mj.at("images").get<std::vector<Elem>>();
            a.resolve_map(m);  // verify now; throws on bad maps
            a.maps.push_back(std::move(m));
        }
    if (j.contains("reports"))
        for (const json& rj : j.at("reports")) a.reports.push_back(rj);
    return a;
}

Atlas load_atlas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open atlas: " + path);
    json j;
    in >> j;
    return Atlas::from_json(j);
}

void save_atlas(const Atlas& atlas, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write atlas: " + path);
    out << atlas.to_json().dump(2) << "\n";
}

Atlas fixture_atlas() {
    Atlas a;
    for (const Fixture& fx : fixture_catalog()) {
        if (!a.find_ring(fx.ring->name())) a.rings.push_back(fx.ring);
        Atlas::MapEntry m;
        m.ring = fx.ring->name();
        m.name = fx.twist.label();
        m.images = fx.twist.images();
        bool dup = false;
        for (const Atlas::MapEntry& other : a.maps)
            if (other.ring == m.ring && other.images == m.images) dup = true;
        if (!dup) a.maps.push_back(std::move(m));
    }
    return a;
}

std::string resolve_atlas_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* env = std::getenv("RINGATLAS_PATH")) {
        std::stringstream ss(env);
        std::string dir;
        while (std::getline(ss, dir, ':')) {
            if (dir.empty()) continue;
            fs::path candidate = fs::path(dir) / path;
            if (fs::exists(candidate)) return candidate.string();
        }
    }
    return path;
}

}  // namespace ringatlas
