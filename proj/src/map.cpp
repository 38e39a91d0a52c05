#include "ringatlas/map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringatlas {

std::string to_string(MapKind k) {
    switch (k) {
        case MapKind::unverified: return "unverified";
        case MapKind::homomorphism: return "homomorphism";
        case MapKind::endomorphism: return "endomorphism";
        case MapKind::isomorphism: return "isomorphism";
        case MapKind::automorphism: return "automorphism";
    }
    return "?";
}

std::string MapViolation::to_string() const {
    std::ostringstream os;
    os << "map violates " << rule;
    if (!elements.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (i) os << ", ";
            os << elements[i];
        }
        os << ")";
    }
    return os.str();
}

RingMap::RingMap(RingPtr s, RingPtr t, std::vector<Elem> images, MapKind kind,
                 std::string label)
    : source_(std::move(s)),
      target_(std::move(t)),
      images_(std::move(images)),
      kind_(kind),
      label_(std::move(label)) {}

RingMap RingMap::verified(RingPtr source, RingPtr target,
                          std::vector<Elem> images, std::string label) {
    const std::size_t n = source->order();
    if (images.size() != n)
        throw MapError({"shape", {}});
    for (Elem v : images)
        if (v >= target->order()) throw MapError({"shape", {v}});
    if (images[source->one()] != target->one())
        throw MapError({"unit", {source->one()}});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (images[source->add(Elem(a), Elem(b))] !=
                target->add(images[a], images[b]))
                throw MapError({"additivity", {Elem(a), Elem(b)}});
            if (images[source->mul(Elem(a), Elem(b))] !=
                target->mul(images[a], images[b]))
                throw MapError({"multiplicativity", {Elem(a), Elem(b)}});
        }
    bool bij = false;
    if (source->order() == target->order()) {
        std::vector<std::uint8_t> hit(n, 0);
        bij = true;
        for (Elem v : images) {
            if (hit[v]) { bij = false; break; }
            hit[v] = 1;
        }
    }
    const bool same = source.get() == target.get() ||
                      source->same_structure(*target);
    MapKind kind = same ? (bij ? MapKind::automorphism : MapKind::endomorphism)
                        : (bij ? MapKind::isomorphism : MapKind::homomorphism);
    return RingMap(std::move(source), std::move(target), std::move(images),
                   kind, std::move(label));
}

RingMap RingMap::identity(RingPtr r) {
    std::vector<Elem> img(r->order());
    std::iota(img.begin(), img.end(), Elem(0));
    return RingMap(r, r, std::move(img), MapKind::automorphism, "id");
}

bool RingMap::is_identity_table() const {
    if (source_.get() != target_.get() && !source_->same_structure(*target_))
        return false;
    for (std::size_t a = 0; a < images_.size(); ++a)
        if (images_[a] != Elem(a)) return false;
    return true;
}

bool RingMap::injective() const {
    std::vector<std::uint8_t> hit(target_->order(), 0);
    for (Elem v : images_) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

RingMap RingMap::compose(const RingMap& other) const {
    if (other.target_->order() != source_->order())
        throw MapError({"shape", {}});
    std::vector<Elem> img(other.images_.size());
    for (std::size_t a = 0; a < img.size(); ++a)
        img[a] = images_[other.images_[a]];
    return RingMap::verified(other.source_, target_, std::move(img),
                             label_ + "." + other.label_);
}

RingMap RingMap::inverse() const {
    if (!injective() || source_->order() != target_->order())
        throw MapError({"injectivity", {}});
    std::vector<Elem> img(images_.size());
    for (std::size_t a = 0; a < images_.size(); ++a) img[images_[a]] = Elem(a);
    return RingMap::verified(target_, source_, std::move(img),
                             label_ + "^-1");
}

std::optional<std::uint64_t> map_order(const RingMap& m) {
    if (m.source().get() != m.target().get() &&
        !m.source()->same_structure(*m.target()))
        throw MapError({"shape", {}});
    const std::size_t n = m.source()->order();
    if (m.injective()) {
        // permutation order: lcm of cycle lengths
        std::vector<std::uint8_t> done(n, 0);
        std::uint64_t order = 1;
        for (std::size_t a = 0; a < n; ++a) {
            if (done[a]) continue;
            std::uint64_t len = 0;
            Elem x = Elem(a);
            while (!done[x]) {
                done[x] = 1;
                x = m(x);
                ++len;
            }
            order = std::lcm(order, len);
        }
        return order;
    }
    std::vector<Elem> id(n), cur = m.images();
    std::iota(id.begin(), id.end(), Elem(0));
    std::vector<std::vector<Elem>> seen;
    for (std::size_t step = 1; step <= 2 * n; ++step) {
        if (cur == id) return step;
        if (std::find(seen.begin(), seen.end(), cur) != seen.end())
            return std::nullopt;  // cycled without hitting the identity
        seen.push_back(cur);
        std::vector<Elem> next(n);
        for (std::size_t a = 0; a < n; ++a) next[a] = m(cur[a]);
        cur = std::move(next);
    }
    return std::nullopt;
}

RingMap transport(const RingMap& phi, const RingMap& alpha) {
    if (phi.kind() != MapKind::isomorphism &&
        phi.kind() != MapKind::automorphism)
        throw MapError({"injectivity", {}});
    if (!alpha.is_endomorphism()) throw MapError({"shape", {}});
    if (phi.source()->order() != alpha.source()->order())
        throw MapError({"shape", {}});
    std::vector<Elem> inv(phi.images().size());
    for (std::size_t a = 0; a < inv.size(); ++a) inv[phi(Elem(a))] = Elem(a);
    std::vector<Elem> img(phi.target()->order());
    for (std::size_t s = 0; s < img.size(); ++s)
        img[s] = phi(alpha(inv[s]));
    return RingMap::verified(phi.target(), phi.target(), std::move(img),
                             phi.label() + "." + alpha.label() + "." +
                                 phi.label() + "^-1");
}

Quotient make_quotient(const RingPtr& r, const ElementSet& ideal,
                       std::string name) {
    if (!is_two_sided_ideal(*r, ideal)) {
        // find a witness: either closure under + fails or absorption fails
        for (Elem a : ideal.members) {
            for (Elem b : ideal.members)
                if (!ideal.contains(r->add(a, b)))
                    throw RingError({"not-an-ideal", {a, b}, "sum escapes"});
            for (std::size_t x = 0; x < r->order(); ++x) {
                if (!ideal.contains(r->mul(a, Elem(x))))
                    throw RingError(
                        {"not-an-ideal", {a, Elem(x)}, "aR escapes"});
                if (!ideal.contains(r->mul(Elem(x), a)))
                    throw RingError(
                        {"not-an-ideal", {Elem(x), a}, "Ra escapes"});
            }
        }
        throw RingError({"not-an-ideal", {}, "zero missing"});
    }
    const std::size_t n = r->order();
    if (ideal.size() == n)
        throw RingError({"order", {}, "quotient by R itself"});

    std::vector<Elem> coset(n, Subring::npos);
    std::vector<Elem> reps;
    for (std::size_t a = 0; a < n; ++a) {
        if (coset[a] != Subring::npos) continue;
        const Elem idx = Elem(reps.size());
        reps.push_back(Elem(a));
        for (Elem i : ideal.members) coset[r->add(Elem(a), i)] = idx;
    }
    if (reps.size() * ideal.size() != n)
        throw std::logic_error("quotient: cosets do not partition");

    const std::size_t m = reps.size();
    FiniteRing::Table add(m, std::vector<Elem>(m)), mul(m,
                                                        std::vector<Elem>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            add[a][b] = coset[r->add(reps[a], reps[b])];
            mul[a][b] = coset[r->mul(reps[a], reps[b])];
        }
    if (name.empty()) name = r->name() + "/I" + std::to_string(ideal.size());
    RingPtr q = make_validated(std::move(name), add, mul, coset[r->zero()],
                               coset[r->one()]);
    std::vector<Elem> proj(coset.begin(), coset.end());
    RingMap pi = RingMap::verified(r, q, std::move(proj), "pi");
    return Quotient{std::move(q), std::move(pi), std::move(reps),
                    std::move(coset)};
}

RingMap induced_quotient_map(const Quotient& q, const RingMap& alpha) {
    const FiniteRing& r = *alpha.source();
    // alpha must map each coset into one coset, i.e. alpha(I) within I
    for (std::size_t a = 0; a < r.order(); ++a)
        if (q.coset[a] == q.coset[r.zero()] &&
            q.coset[alpha(Elem(a))] != q.coset[r.zero()])
            throw MapError({"multiplicativity", {Elem(a)}});  // alpha(I) !< I
    std::vector<Elem> img(q.reps.size());
    for (std::size_t c = 0; c < q.reps.size(); ++c)
        img[c] = q.coset[alpha(q.reps[c])];
    return RingMap::verified(q.ring, q.ring, std::move(img),
                             alpha.label() + "~");
}

Subring subring_from_subset(const RingPtr& r, const ElementSet& members,
                            Elem one, std::string name) {
    const std::size_t m = members.size();
    std::vector<Elem> index_of(r->order(), Subring::npos);
    for (std::size_t i = 0; i < m; ++i) index_of[members.members[i]] = Elem(i);
    if (!members.contains(r->zero()) || !members.contains(one))
        throw RingError({"subring-closure", {one}, "zero or one missing"});
    FiniteRing::Table add(m, std::vector<Elem>(m)), mul(m,
                                                        std::vector<Elem>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Elem s = r->add(members.members[i], members.members[j]);
            Elem p = r->mul(members.members[i], members.members[j]);
            if (index_of[s] == Subring::npos)
                throw RingError({"subring-closure",
                                 {members.members[i], members.members[j]},
                                 "sum escapes subset"});
            if (index_of[p] == Subring::npos)
                throw RingError({"subring-closure",
                                 {members.members[i], members.members[j]},
                                 "product escapes subset"});
            add[i][j] = index_of[s];
            mul[i][j] = index_of[p];
        }
    RingPtr ring = make_validated(std::move(name), add, mul,
                                  index_of[r->zero()], index_of[one]);
    return Subring{std::move(ring), members.members, std::move(index_of)};
}

RingMap restrict_to_subring(const Subring& s, const RingMap& alpha) {
    std::vector<Elem> img(s.members.size());
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        Elem v = alpha(s.members[i]);
        if (s.index_of[v] == Subring::npos)
            throw MapError({"shape", {s.members[i]}});  // not invariant
        img[i] = s.index_of[v];
    }
    return RingMap::verified(s.ring, s.ring, std::move(img),
                             alpha.label() + "|");
}

std::vector<RingMap> all_endomorphisms(const RingPtr& r) {
    const std::size_t n = r->order();
    if (n > 16)
        throw std::invalid_argument(
            "all_endomorphisms: brute force limited to order <= 16");

    // greedy additive generating set; each element remembers how it was made
    std::vector<Elem> gens;
    std::vector<int> gen_of(n, -1);       // element -> index of last generator
    std::vector<Elem> base_of(n, 0);      // element = base + gens[gen_of]
    std::vector<std::uint8_t> in_span(n, 0);
    in_span[r->zero()] = 1;
    std::vector<Elem> span_order{r->zero()};
    for (std::size_t g = 0; g < n; ++g) {
        if (in_span[g]) continue;
        gens.push_back(Elem(g));
        // grow the span by repeatedly adding g to known elements
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Elem> snapshot = span_order;
            for (Elem s : snapshot) {
                Elem e = r->add(s, Elem(g));
                if (!in_span[e]) {
                    in_span[e] = 1;
                    gen_of[e] = int(gens.size()) - 1;
                    base_of[e] = s;
                    span_order.push_back(e);
                    grew = true;
                }
            }
        }
    }

    auto additive_order = [&](Elem a) {
        std::size_t k = 1;
        Elem x = a;
        while (!r->is_zero(x)) { x = r->add(x, a); ++k; }
        return k;
    };
    std::vector<std::size_t> gen_ord(gens.size());
    std::vector<std::size_t> elem_ord(n);
    for (std::size_t a = 0; a < n; ++a) elem_ord[a] = additive_order(Elem(a));
    for (std::size_t i = 0; i < gens.size(); ++i)
        gen_ord[i] = elem_ord[gens[i]];

    std::vector<RingMap> found;
    std::vector<Elem> choice(gens.size(), 0);
    const std::size_t k = gens.size();
    while (true) {
        bool plausible = true;
        for (std::size_t i = 0; i < k && plausible; ++i)
            if (gen_ord[i] % elem_ord[choice[i]] != 0) plausible = false;
        if (plausible) {
            std::vector<Elem> img(n, 0);
            img[r->zero()] = r->zero();
            for (Elem e : span_order) {
                if (gen_of[e] < 0) continue;
                img[e] = r->add(img[base_of[e]], choice[gen_of[e]]);
            }
            try {
                found.push_back(RingMap::verified(r, r, std::move(img)));
            } catch (const MapError&) {
            }
        }
        // odometer over generator images
        std::size_t pos = 0;
        while (pos < k) {
            if (++choice[pos] < n) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return found;
}

}  // namespace ringatlas
