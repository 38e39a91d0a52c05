#include "ringatlas/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace ringatlas {

namespace {

int verdict_exit_code(const PropertyReport& rep) {
    if (rep.verdict == Verdict::fails) return 1;
    if (rep.verdict == Verdict::holds_up_to_budget) return 2;
    return 0;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << text;
}

}  // namespace

int run_check(const CheckArgs& args, std::ostream& os, std::ostream& err) {
    try {
        RingPtr ring;
        std::optional<RingMap> twist;
        if (!args.fixture.empty()) {
            const Fixture& fx = paper_fixture(args.fixture);
            ring = fx.ring;
            twist = fx.twist;
        } else if (!args.atlas_path.empty()) {
            Atlas atlas = load_atlas(resolve_atlas_path(args.atlas_path));
            ring = atlas.find_ring(args.ring);
            if (!ring) throw std::out_of_range("unknown ring: " + args.ring);
            if (args.map.empty()) {
                twist = RingMap::identity(ring);
            } else {
                for (const Atlas::MapEntry& m : atlas.maps)
                    if (m.ring == args.ring && m.name == args.map)
                        twist = atlas.resolve_map(m);
                if (!twist)
                    throw std::out_of_range("unknown map: " + args.map);
            }
        } else {
            throw std::invalid_argument("need --fixture or --atlas/--ring");
        }
        ScanOptions scan{args.degree, args.degree, args.strategy, args.budget};
        PropertyReport rep =
            check_property(args.property, ring, *twist, scan);
        os << rep.property << " on " << rep.ring << " (twist " << rep.twist
           << "): " << to_string(rep.verdict)
           << " [pairs_examined=" << rep.pairs_examined << "]\n";
        if (rep.witness)
            os << "witness: " << witness_to_json(*rep.witness).dump() << "\n";
        if (!args.out.empty())
            write_file(args.out, report_to_json(rep).dump(2) + "\n");
        return verdict_exit_code(rep);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

bool ReproResult::fixtures_ok() const {
    for (const FixtureOutcome& f : fixtures)
        if (!f.ok) return false;
    return true;
}

std::size_t ReproResult::soft_total() const {
    std::size_t n = 0;
    for (const FixtureOutcome& f : fixtures) n += f.soft_violations;
    return n;
}

std::string ReproResult::table() const {
    std::ostringstream os;
    os << "== fixtures ==\n";
    for (const FixtureOutcome& f : fixtures) {
        os << f.id << ": " << (f.ok ? "ok" : "FAIL");
        if (f.soft_violations)
            os << " (soft-violations=" << f.soft_violations << ")";
        os << "\n";
        for (const std::string& line : f.lines) os << "  " << line << "\n";
    }
    os << "== harness ==\n" << ledger_table(ledger);
    os << "== summary ==\n"
       << "fixtures=" << (fixtures_ok() ? "ok" : "FAIL")
       << " soft-violations=" << soft_total()
       << " harness=" << (ledger.ok() ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string ReproResult::witnesses_json() const {
    nlohmann::json out;
    out["witnesses"] = nlohmann::json::array();
    for (const FixtureOutcome& f : fixtures)
        for (const PropertyReport& rep : f.failing_reports) {
            nlohmann::json w;
            w["fixture"] = f.id;
            w["report"] = report_to_json(rep, /*include_timing=*/false);
            out["witnesses"].push_back(std::move(w));
        }
    return out.dump(2) + "\n";
}

ReproResult run_reproduction(const HarnessOptions& opt, int fixture_degree) {
    ReproResult result;
    const ScanOptions scan{fixture_degree, fixture_degree, opt.strategy,
                           opt.budget};
    for (const Fixture& fx : fixture_catalog()) {
        FixtureOutcome outcome;
        outcome.id = fx.id;
        const FiniteRing& r = *fx.ring;

        if (fx.pair) {
            const FixturePair& p = *fx.pair;
            SkewPolyRing rx(fx.twist);
            std::ostringstream line;
            bool ok = true;
            if (!rx.is_zero(rx.mul(p.f, p.g))) ok = false;
            Elem prod = r.mul(p.f[p.i], rx.twist_pow(p.i, p.g[p.j]));
            if (prod != p.product) ok = false;
            if (p.expect_nonzero && r.is_zero(prod)) ok = false;
            if (p.expect_noncentral && r.is_central(prod)) ok = false;
            line << "pair: f*g=0, product[" << p.i << "," << p.j
                 << "]=" << prod;
            if (p.expect_nonzero) line << " nonzero";
            if (p.expect_noncentral) line << " noncentral";
            line << (ok ? " ok" : " FAIL");
            outcome.lines.push_back(line.str());
            if (!ok) outcome.ok = false;
        }
        if (fx.moved_idempotent) {
            Elem e = *fx.moved_idempotent;
            bool ok = r.mul(e, e) == e && fx.twist(e) != e;
            std::ostringstream line;
            line << "moved idempotent e=" << e << " twist(e)=" << fx.twist(e)
                 << (ok ? " ok" : " FAIL");
            outcome.lines.push_back(line.str());
            if (!ok) outcome.ok = false;
        }
        for (const ExpectedAssertion& ea : fx.expected) {
            PropertyReport rep =
                check_property(ea.property, fx.ring, fx.twist, scan);
            const bool got = rep.holds();
            const bool ok = got == ea.holds;
            std::ostringstream line;
            line << ea.property << ": " << to_string(rep.verdict)
                 << " (expected " << (ea.holds ? "holds" : "fails") << ")";
            if (ok)
                line << " ok";
            else if (ea.soft)
                line << " SOFT-VIOLATION";
            else
                line << " FAIL";
            outcome.lines.push_back(line.str());
            if (!ok) {
                if (ea.soft)
                    ++outcome.soft_violations;
                else
                    outcome.ok = false;
            }
            if (rep.failed() && rep.witness)
                outcome.failing_reports.push_back(std::move(rep));
        }
        result.fixtures.push_back(std::move(outcome));
    }
    result.ledger = run_harness(fixture_catalog(), opt);
    return result;
}

int run_reproduce_cmd(const ReproArgs& args, std::ostream& os,
                      std::ostream& err) {
    try {
        ReproResult result =
            run_reproduction(args.harness, args.fixture_degree);
        os << result.table();
        if (!args.out.empty()) write_file(args.out, ledger_to_json(result.ledger));
        if (!args.witnesses_out.empty())
            write_file(args.witnesses_out, result.witnesses_json());
        return result.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

namespace {

struct SearchCandidate {
    std::string origin;  // fixture id or atlas map label
    RingPtr ring;
    RingMap twist;
};

bool satisfies(const SearchCandidate& cand, const std::string& clause,
               const ScanOptions& scan) {
    if (clause == "twist=id") return cand.twist.is_identity_table();
    if (clause == "twist!=id") return !cand.twist.is_identity_table();
    const auto eq = clause.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("bad constraint: " + clause);
    const std::string prop = clause.substr(0, eq);
    const std::string want = clause.substr(eq + 1);
    if (want != "holds" && want != "fails")
        throw std::invalid_argument("bad constraint verdict: " + clause);
    PropertyReport rep = check_property(prop, cand.ring, cand.twist, scan);
    return rep.holds() == (want == "holds");
}

}  // namespace

int run_search(const SearchArgs& args, std::ostream& os, std::ostream& err) {
    try {
        std::vector<SearchCandidate> candidates;
        if (args.atlas_path.empty()) {
            for (const Fixture& fx : fixture_catalog())
                candidates.push_back({fx.id, fx.ring, fx.twist});
        } else {
            Atlas atlas = load_atlas(resolve_atlas_path(args.atlas_path));
            for (const RingPtr& r : atlas.rings)
                candidates.push_back(
                    {r->name() + "/id", r, RingMap::identity(r)});
            for (const Atlas::MapEntry& m : atlas.maps) {
                RingMap tw = atlas.resolve_map(m);
                if (tw.is_identity_table()) continue;
                candidates.push_back(
                    {m.ring + "/" + m.name, tw.source(), tw});
            }
        }
        if (args.all_endos) {
            std::vector<SearchCandidate> extra;
            for (const SearchCandidate& c : candidates) {
                if (c.ring->order() > 16) continue;
                for (RingMap& endo : all_endomorphisms(c.ring)) {
                    bool known = false;
                    for (const SearchCandidate& k : candidates)
                        if (k.ring.get() == c.ring.get() &&
                            k.twist.images() == endo.images())
                            known = true;
                    for (const SearchCandidate& k : extra)
                        if (k.ring.get() == c.ring.get() &&
                            k.twist.images() == endo.images())
                            known = true;
                    if (known) continue;
                    extra.push_back({c.origin + "/endo", c.ring,
                                     std::move(endo)});
                }
            }
            for (SearchCandidate& c : extra) candidates.push_back(std::move(c));
        }

        const ScanOptions scan{args.degree, args.degree, args.strategy,
                               args.budget};
        std::uint64_t found = 0;
        for (const SearchCandidate& cand : candidates) {
            bool all = true;
            for (const std::string& clause : args.where)
                if (!satisfies(cand, clause, scan)) {
                    all = false;
                    break;
                }
            if (!all) continue;
            os << "match: " << cand.origin << " ring=" << cand.ring->name()
               << " order=" << cand.ring->order()
               << " twist=" << cand.twist.label() << "\n";
            if (++found >= args.limit) {
                os << "limit reached\n";
                break;
            }
        }
        os << "matches=" << found << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_atlas_cmd(const AtlasArgs& args, std::ostream& os, std::ostream& err) {
    try {
        if (args.action == "export") {
            if (args.out.empty())
                throw std::invalid_argument("export needs --out");
            Atlas atlas = fixture_atlas();
            save_atlas(atlas, args.out);
            os << "exported rings=" << atlas.rings.size()
               << " maps=" << atlas.maps.size() << " -> " << args.out << "\n";
            return 0;
        }
        if (args.action == "import") {
            Atlas atlas = load_atlas(resolve_atlas_path(args.path));
            os << "imported rings=" << atlas.rings.size()
               << " maps=" << atlas.maps.size() << "\n";
            return 0;
        }
        if (args.action == "list") {
            if (args.path.empty()) {
                for (const Fixture& fx : fixture_catalog()) {
                    auto t = map_order(fx.twist);
                    os << "fixture=" << fx.id << " ring=" << fx.ring->name()
                       << " order=" << fx.ring->order()
                       << " twist=" << fx.twist.label() << " twist-order="
                       << (t ? std::to_string(*t) : std::string("inf"))
                       << "\n";
                }
            } else {
                Atlas atlas = load_atlas(resolve_atlas_path(args.path));
                for (const RingPtr& r : atlas.rings)
                    os << "ring=" << r->name() << " order=" << r->order()
                       << "\n";
                for (const Atlas::MapEntry& m : atlas.maps) {
                    RingMap tw = atlas.resolve_map(m);
                    auto t = map_order(tw);
                    os << "map=" << m.name << " ring=" << m.ring
                       << " kind=" << to_string(tw.kind()) << " twist-order="
                       << (t ? std::to_string(*t) : std::string("inf"))
                       << "\n";
                }
            }
            return 0;
        }
        throw std::invalid_argument("unknown atlas action: " + args.action);
    } catch (const RingError& e) {
        err << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ringatlas
