#include "ringatlas/skew.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace ringatlas {

SkewPolyRing::SkewPolyRing(RingMap twist, std::size_t max_power)
    : ring_ptr_(twist.source()), ring_(ring_ptr_.get()), twist_(std::move(twist)) {
    if (!twist_.is_endomorphism())
        throw MapError({"shape", {}});
    twist_identity_ = twist_.is_identity_table();
    const std::size_t n = ring_->order();
    std::vector<Elem> id(n);
    for (std::size_t a = 0; a < n; ++a) id[a] = Elem(a);
    std::map<std::vector<Elem>, std::size_t> seen;
    powers_.push_back(id);
    seen[id] = 0;
    while (powers_.size() <= max_power) {
        std::vector<Elem> next(n);
        for (std::size_t a = 0; a < n; ++a) next[a] = twist_(powers_.back()[a]);
        auto it = seen.find(next);
        if (it != seen.end()) {
            cycle_ = {it->second, powers_.size() - it->second};
            break;
        }
        seen[next] = powers_.size();
        powers_.push_back(std::move(next));
    }
}

const std::vector<Elem>& SkewPolyRing::power_table(std::size_t i) const {
    if (i < powers_.size()) return powers_[i];
    if (cycle_) {
        auto [start, len] = *cycle_;
        return powers_[start + (i - start) % len];
    }
    throw std::out_of_range("twist power exceeds precomputed range");
}

Poly SkewPolyRing::normalized(Poly f) const {
    while (!f.empty() && f.back() == ring_->zero()) f.pop_back();
    return f;
}

bool SkewPolyRing::is_zero(const Poly& f) const {
    for (Elem c : f)
        if (c != ring_->zero()) return false;
    return true;
}

int SkewPolyRing::degree(const Poly& f) const {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != ring_->zero()) return int(i);
    return -1;
}

Poly SkewPolyRing::add(const Poly& f, const Poly& g) const {
    Poly h(std::max(f.size(), g.size()), ring_->zero());
    for (std::size_t i = 0; i < h.size(); ++i) {
        Elem a = i < f.size() ? f[i] : ring_->zero();
        Elem b = i < g.size() ? g[i] : ring_->zero();
        h[i] = ring_->add(a, b);
    }
    return normalized(std::move(h));
}

Poly SkewPolyRing::neg(const Poly& f) const {
    Poly h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = ring_->neg(f[i]);
    return h;
}

Poly SkewPolyRing::mul(const Poly& f, const Poly& g) const {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, ring_->zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == ring_->zero()) continue;
        const std::vector<Elem>& tw = power_table(i);
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = ring_->add(h[i + j], ring_->mul(f[i], tw[g[j]]));
    }
    return normalized(std::move(h));
}

Poly SkewPolyRing::twist_poly(const Poly& f) const {
    Poly h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = twist_(f[i]);
    return normalized(std::move(h));
}

bool SkewPolyRing::is_idempotent(const Poly& f) const {
    return mul(f, f) == normalized(f);
}

Poly SkewPolyRing::plain_mul(const Poly& f, const Poly& g) const {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, ring_->zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == ring_->zero()) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = ring_->add(h[i + j], ring_->mul(f[i], g[j]));
    }
    return normalized(std::move(h));
}

namespace {

// odometer over coefficient vectors in lexicographic order, index 0 most
// significant (the last index ticks fastest)
bool next_vector(std::vector<Elem>& v, std::size_t alphabet) {
    std::size_t pos = v.size();
    while (pos-- > 0) {
        if (std::size_t(v[pos]) + 1 < alphabet) {
            ++v[pos];
            std::fill(v.begin() + pos + 1, v.end(), Elem(0));
            return true;
        }
    }
    return false;
}

bool all_zero(const std::vector<Elem>& v, Elem zero) {
    return std::all_of(v.begin(), v.end(), [&](Elem c) { return c == zero; });
}

ZeroPair make_zero_pair(const SkewPolyRing& rx, const Poly& f_raw,
                        const Poly& g_raw) {
    ZeroPair zp;
    zp.f = rx.normalized(f_raw);
    zp.g = rx.normalized(g_raw);
    zp.width = zp.g.size();
    zp.products.resize(zp.f.size() * zp.g.size());
    for (std::size_t i = 0; i < zp.f.size(); ++i) {
        const std::vector<Elem>& tw = rx.power_table(i);
        for (std::size_t j = 0; j < zp.g.size(); ++j)
            zp.products[i * zp.width + j] =
                rx.ring().mul(zp.f[i], tw[zp.g[j]]);
    }
    return zp;
}

struct DfsContext {
    const SkewPolyRing& rx;
    const Poly& f;
    std::uint64_t budget;
    const std::function<bool(const ZeroPair&)>& sink;
    ScanStats& stats;
    Poly g;

    // coefficient k of f*g given g_0..g_k
    Elem product_coeff(std::size_t k) const {
        const FiniteRing& r = rx.ring();
        Elem acc = r.zero();
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i > k) break;
            std::size_t j = k - i;
            if (j >= g.size()) continue;
            acc = r.add(acc, r.mul(f[i], rx.twist_pow(i, g[j])));
        }
        return acc;
    }

    // returns false to abort the whole scan (budget or sink stop)
    bool descend(std::size_t depth) {
        const FiniteRing& r = rx.ring();
        const std::size_t n = r.order();
        for (std::size_t b = 0; b < n; ++b) {
            if (stats.visited >= budget) {
                stats.outcome = ScanOutcome::budget_hit;
                return false;
            }
            ++stats.visited;
            g[depth] = Elem(b);
            if (product_coeff(depth) != r.zero()) continue;
            if (depth + 1 < g.size()) {
                if (!descend(depth + 1)) return false;
                continue;
            }
            // complete candidate; remaining product coefficients use only
            // known g entries
            bool zero = true;
            for (std::size_t k = g.size(); k + 1 < f.size() + g.size(); ++k)
                if (product_coeff(k) != r.zero()) { zero = false; break; }
            if (!zero || all_zero(g, r.zero())) continue;
            if (!sink(make_zero_pair(rx, f, g))) {
                stats.outcome = ScanOutcome::stopped;
                return false;
            }
        }
        return true;
    }
};

}  // namespace

ScanStats enumerate_zero_pairs(const SkewPolyRing& rx, int d_f, int d_g,
                               SearchStrategy strategy, std::uint64_t budget,
                               const std::function<bool(const ZeroPair&)>& sink) {
    if (d_f < 0 || d_g < 0)
        throw std::invalid_argument("degree bounds must be >= 0");
    if (budget == 0) throw std::invalid_argument("budget must be positive");
    const FiniteRing& r = rx.ring();
    const std::size_t n = r.order();
    ScanStats stats;

    Poly f(std::size_t(d_f) + 1, Elem(0));
    do {
        if (all_zero(f, r.zero())) continue;
        if (strategy == SearchStrategy::exhaustive) {
            Poly g(std::size_t(d_g) + 1, Elem(0));
            do {
                if (all_zero(g, r.zero())) continue;
                if (stats.visited >= budget) {
                    stats.outcome = ScanOutcome::budget_hit;
                    return stats;
                }
                ++stats.visited;
                if (!rx.is_zero(rx.mul(f, g))) continue;
                if (!sink(make_zero_pair(rx, f, g))) {
                    stats.outcome = ScanOutcome::stopped;
                    return stats;
                }
            } while (next_vector(g, n));
        } else {
            DfsContext ctx{rx, f, budget, sink, stats,
                           Poly(std::size_t(d_g) + 1, Elem(0))};
            if (!ctx.descend(0)) return stats;
        }
    } while (next_vector(f, n));
    return stats;
}

std::vector<Poly> idempotent_polynomials(const SkewPolyRing& rx, int d) {
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    const FiniteRing& r = rx.ring();
    const std::size_t n = r.order();
    std::vector<Poly> out;
    // prefix prune: coefficient k of e*e depends only on e_0..e_k
    Poly e(std::size_t(d) + 1, Elem(0));
    auto coeff = [&](std::size_t k) {
        Elem acc = r.zero();
        for (std::size_t i = 0; i <= k && i < e.size(); ++i) {
            std::size_t j = k - i;
            if (j >= e.size()) continue;
            acc = r.add(acc, r.mul(e[i], rx.twist_pow(i, e[j])));
        }
        return acc;
    };
    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        for (std::size_t c = 0; c < n; ++c) {
            e[depth] = Elem(c);
            // coefficient `depth` of e*e must equal e[depth]
            if (coeff(depth) != e[depth]) continue;
            if (depth + 1 < e.size()) {
                descend(depth + 1);
                continue;
            }
            bool ok = true;
            for (std::size_t k = e.size(); k + 1 < 2 * e.size(); ++k)
                if (coeff(k) != r.zero()) { ok = false; break; }
            if (ok) out.push_back(rx.normalized(e));
        }
    };
    descend(0);
    return out;
}

ConstantAnnihilator constant_right_annihilator(const SkewPolyRing& rx, Elem a,
                                               int d) {
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    const FiniteRing& r = rx.ring();
    // (constant a) * g has coefficient j equal to a*g_j, so the solutions
    // are exactly the vectors with every coefficient in r_R(a)
    ElementSet ann = right_annihilator(r, std::array<Elem, 1>{a});
    ConstantAnnihilator out;
    std::vector<Elem> digits(std::size_t(d) + 1, 0);
    // enumerate in lexicographic order over the annihilator's elements
    while (true) {
        Poly g(digits.size());
        for (std::size_t i = 0; i < digits.size(); ++i)
            g[i] = ann.members[digits[i]];
        out.polys.push_back(rx.normalized(g));
        if (!next_vector(digits, ann.size())) break;
    }
    std::sort(out.polys.begin(), out.polys.end());
    out.polys.erase(std::unique(out.polys.begin(), out.polys.end()),
                    out.polys.end());

    for (Elem e : idempotents(r).members) {
        ElementSet er = principal_right_ideal(r, e);
        if (er.members == ann.members) {
            out.generator_idempotent = e;
            break;
        }
    }
    return out;
}

Poly pack_polynomials(const FiniteRing& r, const std::vector<Poly>& parts,
                      std::uint64_t t, std::uint64_t k) {
    if (t == 0) throw std::invalid_argument("t must be >= 1");
    std::uint64_t degree_sum = 0;
    for (const Poly& p : parts) {
        int d = -1;
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != r.zero()) { d = int(i); break; }
        degree_sum += d < 0 ? 0 : std::uint64_t(d);  // zero part counts as 0
    }
    if (k < degree_sum)
        throw std::invalid_argument("pack_polynomials: k below degree sum");
    if (parts.empty()) return {};
    std::uint64_t top = std::uint64_t(parts.size() - 1) * (t * k + 1);
    Poly out(top + t * degree_sum + 1, r.zero());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::uint64_t base = std::uint64_t(i) * (t * k + 1);
        for (std::size_t u = 0; u < parts[i].size(); ++u) {
            if (parts[i][u] == r.zero()) continue;
            std::uint64_t pos = base + std::uint64_t(u) * t;
            if (pos >= out.size()) out.resize(pos + 1, r.zero());
            if (out[pos] != r.zero())
                throw std::logic_error("pack_polynomials: slot collision");
            out[pos] = parts[i][u];
        }
    }
    while (!out.empty() && out.back() == r.zero()) out.pop_back();
    return out;
}

namespace {

struct TowerOps {
    const SkewPolyRing& rx;

    Poly tw(std::size_t i, const Poly& f) const {
        Poly h(f.size());
        const std::vector<Elem>& table = rx.power_table(i);
        for (std::size_t u = 0; u < f.size(); ++u) h[u] = table[f[u]];
        return rx.normalized(std::move(h));
    }

    // y-coefficient k of p*q, as an x-polynomial
    Poly product_coeff(const TowerPoly& p, const TowerPoly& q,
                       std::size_t k) const {
        Poly acc;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > k) break;
            std::size_t j = k - i;
            if (j >= q.size()) continue;
            acc = rx.add(acc, rx.plain_mul(p[i], tw(i, q[j])));
        }
        return acc;
    }

    bool tower_zero(const TowerPoly& p) const {
        for (const Poly& c : p)
            if (!rx.is_zero(c)) return false;
        return true;
    }

    TowerPoly trimmed(TowerPoly p) const {
        for (Poly& c : p) c = rx.normalized(std::move(c));
        while (!p.empty() && p.back().empty()) p.pop_back();
        return p;
    }
};

// enumerate x-polynomials of degree <= d_x in lexicographic order
bool next_xpoly(Poly& v, std::size_t n) { return next_vector(v, n); }

}  // namespace

ScanStats enumerate_tower_zero_pairs(
    const SkewPolyRing& rx, int d_x, int d_y, SearchStrategy strategy,
    std::uint64_t budget,
    const std::function<bool(const TowerZeroPair&)>& sink) {
    if (d_x < 0 || d_y < 0)
        throw std::invalid_argument("degree bounds must be >= 0");
    const FiniteRing& r = rx.ring();
    const std::size_t n = r.order();
    TowerOps ops{rx};
    ScanStats stats;

    auto emit = [&](const TowerPoly& p, const TowerPoly& q) -> bool {
        TowerZeroPair z;
        z.p = ops.trimmed(p);
        z.q = ops.trimmed(q);
        z.width = z.q.size();
        z.products.resize(z.p.size() * z.q.size());
        for (std::size_t i = 0; i < z.p.size(); ++i)
            for (std::size_t j = 0; j < z.q.size(); ++j)
                z.products[i * z.width + j] =
                    rx.plain_mul(z.p[i], ops.tw(i, z.q[j]));
        return sink(z);
    };

    // iterate p over all nonzero tuples of (d_y+1) x-polynomials
    std::vector<Poly> p(std::size_t(d_y) + 1,
                        Poly(std::size_t(d_x) + 1, Elem(0)));
    auto next_tower = [&](std::vector<Poly>& tp) -> bool {
        std::size_t pos = tp.size();
        while (pos-- > 0) {
            if (next_xpoly(tp[pos], n)) {
                for (std::size_t q = pos + 1; q < tp.size(); ++q)
                    std::fill(tp[q].begin(), tp[q].end(), Elem(0));
                return true;
            }
            std::fill(tp[pos].begin(), tp[pos].end(), Elem(0));
        }
        return false;
    };

    do {
        if (ops.tower_zero(p)) continue;
        if (strategy == SearchStrategy::exhaustive) {
            std::vector<Poly> q(std::size_t(d_y) + 1,
                                Poly(std::size_t(d_x) + 1, Elem(0)));
            do {
                if (ops.tower_zero(q)) continue;
                if (stats.visited >= budget) {
                    stats.outcome = ScanOutcome::budget_hit;
                    return stats;
                }
                ++stats.visited;
                bool zero = true;
                for (std::size_t k = 0; k + 1 < p.size() + q.size() && zero;
                     ++k)
                    zero = rx.is_zero(ops.product_coeff(p, q, k));
                if (!zero) continue;
                if (!emit(p, q)) {
                    stats.outcome = ScanOutcome::stopped;
                    return stats;
                }
            } while (next_tower(q));
        } else {
            // dfs over q's y-coefficients, pruning on y-coefficient k
            std::vector<Poly> q(std::size_t(d_y) + 1,
                                Poly(std::size_t(d_x) + 1, Elem(0)));
            std::function<bool(std::size_t)> descend =
                [&](std::size_t depth) -> bool {
                Poly& slot = q[depth];
                std::fill(slot.begin(), slot.end(), Elem(0));
                while (true) {
                    if (stats.visited >= budget) {
                        stats.outcome = ScanOutcome::budget_hit;
                        return false;
                    }
                    ++stats.visited;
                    TowerPoly partial(q.begin(), q.begin() + depth + 1);
                    if (rx.is_zero(ops.product_coeff(p, partial, depth))) {
                        if (depth + 1 < q.size()) {
                            if (!descend(depth + 1)) return false;
                        } else {
                            bool zero = true;
                            for (std::size_t k = q.size();
                                 k + 1 < p.size() + q.size() && zero; ++k)
                                zero = rx.is_zero(ops.product_coeff(p, q, k));
                            if (zero && !ops.tower_zero(q)) {
                                if (!emit(p, q)) {
                                    stats.outcome = ScanOutcome::stopped;
                                    return false;
                                }
                            }
                        }
                    }
                    if (!next_xpoly(slot, n)) break;
                }
                std::fill(slot.begin(), slot.end(), Elem(0));
                return true;
            };
            if (!descend(0)) return stats;
        }
    } while (next_tower(p));
    return stats;
}

}  // namespace ringatlas
