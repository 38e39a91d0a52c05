#include "ringatlas/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace ringatlas {

std::string to_string(CaseMode m) {
    return m == CaseMode::assert_mode ? "assert" : "observe";
}

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::vacuous: return "vacuous";
    }
    return "?";
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers =
        std::min<std::size_t>(std::size_t(jobs), count);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : pool) t.join();
}

struct EntryContext {
    const Fixture* fx = nullptr;
    int degree = 1;
    ScanOptions scan;
    PropertyReport central, skew, abelian, fixes, right_pp, rigid, compatible,
        prime;
    std::optional<std::uint64_t> twist_order;
};

struct CorpusContext {
    const std::vector<Fixture>* corpus = nullptr;
    HarnessOptions opt;
    std::vector<EntryContext> entries;
};

bool budget_limited(const PropertyReport& r) {
    return r.verdict == Verdict::holds_up_to_budget;
}

CaseResult vacuous(std::string entry, std::string why) {
    return {std::move(entry), CaseStatus::vacuous, std::move(why)};
}

CaseResult pass(std::string entry, std::string detail) {
    return {std::move(entry), CaseStatus::pass, std::move(detail)};
}

CaseResult fail(std::string entry, std::string detail) {
    return {std::move(entry), CaseStatus::fail, std::move(detail)};
}

std::string verdicts(std::initializer_list<const PropertyReport*> reps) {
    std::ostringstream os;
    bool first = true;
    for (const PropertyReport* r : reps) {
        if (!first) os << " ";
        first = false;
        os << r->property << "=" << to_string(r->verdict);
    }
    return os.str();
}

// ---- H-ISO ----------------------------------------------------------------

CaseResult run_iso(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    const std::size_t n = r.order();

    std::mt19937_64 rng(cc.opt.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), Elem(0));
    std::shuffle(perm.begin(), perm.end(), rng);

    FiniteRing::Table add(n, std::vector<Elem>(n)), mul(n,
                                                        std::vector<Elem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[perm[a]][perm[b]] = perm[r.add(Elem(a), Elem(b))];
            mul[perm[a]][perm[b]] = perm[r.mul(Elem(a), Elem(b))];
        }
    RingPtr relabeled =
        cc.opt.construction_check == BuildCheck::validate
            ? make_validated(r.name() + "~relabel", add, mul, perm[r.zero()],
                             perm[r.one()])
            : make_trusted(r.name() + "~relabel", add, mul, perm[r.zero()],
                           perm[r.one()]);
    RingMap phi = RingMap::verified(fx.ring, relabeled, perm, "relabel");
    RingMap beta = transport(phi, fx.twist);
    PropertyReport moved = is_central_skew_armendariz(beta, ec.scan);
    if (budget_limited(moved) || budget_limited(ec.central))
        return vacuous(fx.id, "budget");
    if (moved.failed() != ec.central.failed())
        return fail(fx.id, "verdict changed under relabeling: " +
                               verdicts({&ec.central, &moved}));
    if (ec.central.failed()) {
        // the original witness must transport to a witness of the image
        const auto& w = std::get<ZeroPairWitness>(*ec.central.witness);
        auto map_poly = [&](const Poly& p) {
            Poly q(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) q[k] = phi(p[k]);
            return q;
        };
        SkewPolyRing sx(beta);
        Poly f2 = map_poly(w.f), g2 = map_poly(w.g);
        if (!sx.is_zero(sx.mul(f2, g2)))
            return fail(fx.id, "transported witness no longer multiplies to zero");
        Elem prod = relabeled->mul(f2[w.i], sx.twist_pow(w.i, g2[w.j]));
        if (prod != phi(w.product) || relabeled->is_central(prod))
            return fail(fx.id, "transported witness product not preserved");
    }
    return pass(fx.id, verdicts({&ec.central, &moved}));
}

// ---- H-ABELIAN -------------------------------------------------------------

CaseResult run_abelian(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (ec.fixes.failed()) return vacuous(fx.id, "twist moves an idempotent");
    if (budget_limited(ec.central)) return vacuous(fx.id, "budget");

    ElementSet idem = idempotents(r);
    // corner ring eR with the restricted twist; callable only for central e
    auto corner_report = [&](Elem e) -> std::optional<PropertyReport> {
        ElementSet er = principal_right_ideal(r, e);
        if (er.size() < 2) return std::nullopt;  // zero corner, trivially fine
        Subring sub = subring_from_subset(
            fx.ring, er, e, r.name() + "|e" + std::to_string(e));
        RingMap beta = restrict_to_subring(sub, fx.twist);
        return is_central_skew_armendariz(beta, ec.scan);
    };

    if (!ec.central.failed()) {
        if (ec.abelian.failed())
            return fail(fx.id, "central at bound but not abelian: " +
                                   verdicts({&ec.central, &ec.abelian}));
        for (Elem e : idem.members) {
            auto rep = corner_report(e);
            if (!rep) continue;
            if (budget_limited(*rep)) return vacuous(fx.id, "budget");
            if (rep->failed())
                return fail(fx.id, "corner ring e=" + std::to_string(e) +
                                       " fails central although the ring holds");
        }
        return pass(fx.id, "abelian with " + std::to_string(idem.size()) +
                               " central corners");
    }
    if (!ec.abelian.failed()) {
        for (Elem e : idem.members) {
            Elem f = r.sub(r.one(), e);
            auto re = corner_report(e);
            auto rf = corner_report(f);
            bool e_ok = !re || !re->failed();
            bool f_ok = !rf || !rf->failed();
            if ((re && budget_limited(*re)) || (rf && budget_limited(*rf)))
                return vacuous(fx.id, "budget");
            if (e_ok && f_ok)
                return fail(fx.id,
                            "abelian with both corners central at e=" +
                                std::to_string(e) +
                                " yet the ring fails central at bound");
        }
        return pass(fx.id, "failure matched by a failing corner for every "
                           "idempotent");
    }
    return vacuous(fx.id, "central fails and ring is not abelian");
}

// ---- H-COR1 ----------------------------------------------------------------

CaseResult run_cor1(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    if (ec.fixes.failed()) return vacuous(fx.id, "twist moves an idempotent");
    if (budget_limited(ec.skew)) return vacuous(fx.id, "budget");
    if (ec.skew.failed())
        return vacuous(fx.id, "not skew-armendariz at bound");
    if (ec.abelian.failed())
        return fail(fx.id, "skew-armendariz at bound but not abelian");
    return pass(fx.id, verdicts({&ec.skew, &ec.abelian}));
}

// ---- H-LEMMA-IDEM ----------------------------------------------------------

CaseResult run_lemma_idem(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (ec.central.failed() || budget_limited(ec.central))
        return vacuous(fx.id, budget_limited(ec.central)
                                  ? "budget"
                                  : "not central at bound");
    SkewPolyRing rx(fx.twist);
    std::vector<Poly> idems = idempotent_polynomials(rx, ec.degree);
    for (const Poly& e : idems) {
        for (std::size_t k = 1; k < e.size(); ++k)
            if (!r.is_central(e[k]))
                return fail(fx.id,
                            "idempotent polynomial with non-central higher "
                            "coefficient");
        if (!ec.fixes.failed() && e.size() > 1)
            return fail(fx.id, "non-constant idempotent polynomial although "
                               "the twist fixes idempotents");
    }
    return pass(fx.id,
                "idempotent-polynomials=" + std::to_string(idems.size()));
}

// ---- H-SKEWABELIAN ---------------------------------------------------------

CaseResult run_skewabelian(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (ec.central.failed() || budget_limited(ec.central))
        return vacuous(fx.id, budget_limited(ec.central)
                                  ? "budget"
                                  : "not central at bound");
    SkewPolyRing rx(fx.twist);
    for (Elem e : idempotents(r).members) {
        bool commutes = true;
        for (int k = 0; k <= ec.degree && commutes; ++k) {
            Elem te = rx.twist_pow(std::size_t(k), e);
            for (std::size_t a = 0; a < r.order(); ++a)
                if (r.mul(Elem(a), te) != r.mul(e, Elem(a))) {
                    commutes = false;
                    break;
                }
        }
        bool fixed = fx.twist(e) == e;
        if (commutes != fixed)
            return fail(fx.id, "idempotent e=" + std::to_string(e) +
                                   ": bounded centrality in R[x;a] and "
                                   "twist-fixedness disagree");
    }
    return pass(fx.id, "idempotents=" +
                           std::to_string(idempotents(r).size()));
}

// ---- H-PP ------------------------------------------------------------------

CaseResult run_pp(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    if (ec.central.failed() || ec.right_pp.failed() || ec.fixes.failed())
        return vacuous(fx.id, "needs central + right p.p + idempotent-fixing");
    if (budget_limited(ec.central) || budget_limited(ec.skew))
        return vacuous(fx.id, "budget");
    if (ec.skew.failed())
        return fail(fx.id, "hypotheses hold but skew-armendariz fails: " +
                               verdicts({&ec.central, &ec.skew}));
    return pass(fx.id, verdicts({&ec.central, &ec.skew}));
}

// ---- H-PP-POLY (observe) ---------------------------------------------------

CaseResult run_pp_poly(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (ec.right_pp.failed()) return vacuous(fx.id, "not right p.p");
    SkewPolyRing rx(fx.twist);
    std::size_t anomalies = 0;
    for (std::size_t a = 0; a < r.order(); ++a) {
        ConstantAnnihilator ann =
            constant_right_annihilator(rx, Elem(a), ec.degree);
        // cross-check against the ring-level annihilator
        Elem aa = Elem(a);
        ElementSet ra = right_annihilator(r, std::span(&aa, 1));
        std::size_t expect = 1;
        for (int k = 0; k <= ec.degree; ++k) expect *= ra.size();
        if (ann.polys.size() != expect)
            return fail(fx.id, "annihilator polynomial count mismatch at a=" +
                                   std::to_string(a));
        for (std::size_t s = 0; s < std::min<std::size_t>(8, ann.polys.size());
             ++s)
            if (!rx.is_zero(rx.mul(Poly{Elem(a)}, ann.polys[s])))
                return fail(fx.id, "annihilator polynomial does not "
                                   "annihilate at a=" + std::to_string(a));
        if (!ann.generator_idempotent) ++anomalies;
    }
    if (anomalies)
        return fail(fx.id, "constants without a constant idempotent "
                           "generator: " + std::to_string(anomalies));
    return pass(fx.id, "all " + std::to_string(r.order()) +
                           " constant annihilators idempotent-generated");
}

// ---- H-POLY ----------------------------------------------------------------

CaseResult run_poly(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (!ec.twist_order)
        return vacuous(fx.id, "twist has no finite order");
    const std::uint64_t t = *ec.twist_order;

    PropertyReport central1 =
        ec.degree == 1
            ? ec.central
            : is_central_skew_armendariz(
                  fx.twist, ScanOptions{1, 1, cc.opt.strategy, cc.opt.budget});
    if (budget_limited(central1)) return vacuous(fx.id, "budget");

    SkewPolyRing rx(fx.twist);
    auto central_xpoly = [&](const Poly& h) {
        for (Elem c : h)
            if (!r.is_central(c)) return false;
        return true;
    };
    std::vector<TowerZeroPair> samples;
    std::optional<TowerZeroPair> bad;
    ScanStats st = enumerate_tower_zero_pairs(
        rx, 1, 1, cc.opt.strategy, cc.opt.budget,
        [&](const TowerZeroPair& z) {
            if (samples.size() < 64) samples.push_back(z);
            for (std::size_t u = 0; u < z.p.size(); ++u)
                for (std::size_t v = 0; v < z.q.size(); ++v)
                    if (!central_xpoly(z.product(u, v))) {
                        bad = z;
                        return false;
                    }
            return true;
        });
    if (st.outcome == ScanOutcome::budget_hit)
        return vacuous(fx.id, "budget");

    if (central1.failed() && !bad)
        return fail(fx.id, "ring fails central at degree 1 but the R[x] scan "
                           "found no violation at (1,1)");

    auto pack_pair = [&](const TowerZeroPair& z) {
        std::uint64_t k = 0;
        auto deg = [&](const Poly& p) {
            int d = rx.degree(p);
            return std::uint64_t(d < 0 ? 0 : d);
        };
        for (const Poly& part : z.p) k += deg(part);
        for (const Poly& part : z.q) k += deg(part);
        Poly f = pack_polynomials(r, z.p, t, k);
        Poly g = pack_polynomials(r, z.q, t, k);
        return std::pair<Poly, Poly>{std::move(f), std::move(g)};
    };

    if (bad) samples.push_back(*bad);
    for (const TowerZeroPair& z : samples) {
        auto [f, g] = pack_pair(z);
        SkewPolyRing px(fx.twist, f.size() + g.size() + 2);
        if (!px.is_zero(px.mul(f, g)))
            return fail(fx.id, "degree-packed pair does not multiply to zero");
    }
    if (bad) {
        auto [f, g] = pack_pair(*bad);
        if (f.empty() || g.empty())
            return fail(fx.id, "packed witness degenerated to zero");
        SkewPolyRing px(fx.twist, f.size() + g.size() + 2);
        bool noncentral = false;
        for (std::size_t u = 0; u < f.size() && !noncentral; ++u)
            for (std::size_t v = 0; v < g.size(); ++v)
                if (!r.is_central(r.mul(f[u], px.twist_pow(u, g[v])))) {
                    noncentral = true;
                    break;
                }
        if (!noncentral)
            return fail(fx.id, "packed witness lost its non-central product");
    }
    std::ostringstream os;
    os << "tower=" << (bad ? "fails" : "holds")
       << " ring@1=" << to_string(central1.verdict)
       << " packed=" << samples.size();
    return pass(fx.id, os.str());
}

// ---- H-LIFT (observe) -------------------------------------------------------

CaseResult run_lift(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    if (r.order() > 16)
        return vacuous(fx.id, "ideal enumeration limited to order <= 16");
    if (ec.compatible.failed()) return vacuous(fx.id, "twist not compatible");
    if (budget_limited(ec.central)) return vacuous(fx.id, "budget");

    std::size_t triples = 0, anomalies = 0;
    for (const ElementSet& ideal : all_two_sided_ideals(r)) {
        if (ideal.size() == r.order()) continue;
        bool invariant = true;
        bool reduced = true;
        for (Elem x : ideal.members) {
            if (!ideal.contains(fx.twist(x))) invariant = false;
            if (!r.is_zero(x) && r.is_zero(r.mul(x, x))) reduced = false;
        }
        if (!invariant || !reduced) continue;
        Quotient q = make_quotient(fx.ring, ideal);
        RingMap beta = induced_quotient_map(q, fx.twist);
        const int dq = cc.opt.degree_for(q.ring->order());
        PropertyReport repq = is_central_skew_armendariz(
            beta, ScanOptions{dq, dq, cc.opt.strategy, cc.opt.budget});
        if (budget_limited(repq)) return vacuous(fx.id, "budget");
        ++triples;
        if (!repq.failed() && ec.central.failed()) ++anomalies;
    }
    if (triples == 0) return vacuous(fx.id, "no qualifying ideals");
    if (anomalies)
        return fail(fx.id, "central quotient over reduced invariant ideal "
                           "but the ring fails: " + std::to_string(anomalies));
    return pass(fx.id, "triples=" + std::to_string(triples));
}

// ---- H-X2 ------------------------------------------------------------------

CaseResult run_x2(const CorpusContext& cc, std::size_t i) {
    const EntryContext& ec = cc.entries[i];
    const Fixture& fx = *ec.fx;
    const FiniteRing& r = *fx.ring;
    const bool rigid = !ec.rigid.failed();
    const bool forward = rigid;
    const bool converse = !ec.prime.failed() && fx.twist.injective();
    if (!forward && !converse)
        return vacuous(fx.id, "neither rigid nor prime with injective twist");
    if (r.order() * r.order() > FiniteRing::order_cap)
        return vacuous(fx.id, "extension exceeds order cap");

    TrivialExtension te =
        trivial_extension(fx.ring, fx.twist, cc.opt.construction_check);
    const int dt = cc.opt.degree_for(te.ext.ring->order());
    PropertyReport rep = is_central_skew_armendariz(
        te.twist, ScanOptions{dt, dt, cc.opt.strategy, cc.opt.budget});
    if (budget_limited(rep)) return vacuous(fx.id, "budget");
    const bool ext_holds = !rep.failed();
    if (forward && !ext_holds)
        return fail(fx.id, "rigid base but the trivial extension fails "
                           "central at bound");
    if (converse && ext_holds != rigid)
        return fail(fx.id, "prime base: extension verdict and rigidity "
                           "disagree");
    std::ostringstream os;
    os << "extension=" << to_string(rep.verdict) << " rigid="
       << (rigid ? "yes" : "no") << (converse ? " (prime converse)" : "");
    return pass(fx.id, os.str());
}

// ---- H-PRODUCT -------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& product_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"Z2", "T2Z2"},
        {"EX1-swap", "Z4"},
        {"Z3", "Z2"},
        {"Z6", "TX2Z2"},
    };
    return pairs;
}

CaseResult run_product(const CorpusContext& cc, std::size_t i) {
    const auto& [ida, idb] = product_pairs()[i];
    const std::string row = ida + " x " + idb;
    const Fixture* a = nullptr;
    const Fixture* b = nullptr;
    for (const Fixture& fx : *cc.corpus) {
        if (fx.id == ida) a = &fx;
        if (fx.id == idb) b = &fx;
    }
    if (!a || !b) return vacuous(row, "factor not in corpus");
    DirectProduct p =
        direct_product(a->ring, b->ring, "", cc.opt.construction_check);
    RingMap tw = componentwise_map(p, a->twist, b->twist);
    const int d = cc.opt.degree_for(p.ring->order());
    const ScanOptions scan{d, d, cc.opt.strategy, cc.opt.budget};
    PropertyReport rp = is_central_skew_armendariz(tw, scan);
    PropertyReport rl = is_central_skew_armendariz(a->twist, scan);
    PropertyReport rr = is_central_skew_armendariz(b->twist, scan);
    if (budget_limited(rp) || budget_limited(rl) || budget_limited(rr))
        return vacuous(row, "budget");
    const bool want = !rl.failed() && !rr.failed();
    if (!rp.failed() != want)
        return fail(row, "product verdict disagrees with factors: " +
                             verdicts({&rp, &rl, &rr}));
    return pass(row, verdicts({&rp, &rl, &rr}));
}

// ---- case table ------------------------------------------------------------

struct CaseDef {
    HarnessCaseInfo info;
    // row names and a row runner; rows default to corpus entries
    bool per_entry = true;
    CaseResult (*run)(const CorpusContext&, std::size_t) = nullptr;
    std::size_t fixed_rows = 0;
    std::string (*row_name)(std::size_t) = nullptr;
};

std::string product_row_name(std::size_t i) {
    return product_pairs()[i].first + " x " + product_pairs()[i].second;
}

const std::vector<CaseDef>& case_table() {
    static const std::vector<CaseDef> defs = {
        {{"H-ISO", CaseMode::assert_mode,
          "central verdicts are invariant under relabeling isomorphisms"},
         true, run_iso},
        {{"H-ABELIAN", CaseMode::assert_mode,
          "central at bound matches abelian with central corner rings when "
          "the twist fixes idempotents"},
         true, run_abelian},
        {{"H-COR1", CaseMode::assert_mode,
          "skew-armendariz at bound forces every idempotent central"},
         true, run_cor1},
        {{"H-LEMMA-IDEM", CaseMode::assert_mode,
          "idempotent polynomials over central rings have central higher "
          "coefficients, constant under idempotent-fixing twists"},
         true, run_lemma_idem},
        {{"H-SKEWABELIAN", CaseMode::assert_mode,
          "a constant idempotent commutes with bounded polynomials iff the "
          "twist fixes it"},
         true, run_skewabelian},
        {{"H-PP", CaseMode::assert_mode,
          "central + right p.p + idempotent-fixing forces skew-armendariz "
          "at bound"},
         true, run_pp},
        {{"H-PP-POLY", CaseMode::observe_mode,
          "bounded polynomial annihilators of constants are generated by a "
          "constant idempotent on right p.p rings"},
         true, run_pp_poly},
        {{"H-POLY", CaseMode::assert_mode,
          "central at bound transfers between R and bounded R[x] via degree "
          "packing"},
         true, run_poly},
        {{"H-LIFT", CaseMode::observe_mode,
          "a central quotient by a reduced invariant ideal lifts to the "
          "ring under compatible twists"},
         true, run_lift},
        {{"H-X2", CaseMode::assert_mode,
          "a rigid base forces a central trivial extension, and conversely "
          "over prime rings"},
         true, run_x2},
        {{"H-PRODUCT", CaseMode::assert_mode,
          "a binary product is central at bound iff both factors are"},
         false, run_product, 4, product_row_name},
    };
    return defs;
}

}  // namespace

const std::vector<HarnessCaseInfo>& builtin_cases() {
    static const std::vector<HarnessCaseInfo> infos = [] {
        std::vector<HarnessCaseInfo> v;
        for (const CaseDef& def : case_table()) v.push_back(def.info);
        return v;
    }();
    return infos;
}

Ledger run_harness(const std::vector<Fixture>& corpus,
                   const HarnessOptions& options) {
    CorpusContext cc;
    cc.corpus = &corpus;
    cc.opt = options;
    cc.entries.resize(corpus.size());

    parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
        EntryContext& ec = cc.entries[i];
        ec.fx = &corpus[i];
        ec.degree = options.degree_for(corpus[i].ring->order());
        ec.scan = ScanOptions{ec.degree, ec.degree, options.strategy,
                              options.budget};
        ec.central = is_central_skew_armendariz(corpus[i].twist, ec.scan);
        ec.skew = is_skew_armendariz(corpus[i].twist, ec.scan);
        ec.abelian = is_abelian(corpus[i].ring);
        ec.fixes = fixes_idempotents(corpus[i].twist);
        ec.right_pp = is_right_pp(corpus[i].ring);
        ec.rigid = is_rigid(corpus[i].twist);
        ec.compatible = is_compatible(corpus[i].twist);
        ec.prime = is_prime(corpus[i].ring);
        ec.twist_order = map_order(corpus[i].twist);
    });

    Ledger ledger;
    struct Task {
        std::size_t case_index;
        std::size_t row;
    };
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < case_table().size(); ++c) {
        const CaseDef& def = case_table()[c];
        CaseLedger cl;
        cl.info = def.info;
        cl.results.resize(def.per_entry ? corpus.size() : def.fixed_rows);
        ledger.cases.push_back(std::move(cl));
        for (std::size_t rw = 0; rw < ledger.cases.back().results.size(); ++rw)
            tasks.push_back({c, rw});
    }
    parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
        const Task& task = tasks[t];
        const CaseDef& def = case_table()[task.case_index];
        CaseResult res;
        try {
            res = def.run(cc, task.row);
        } catch (const std::exception& e) {
            std::string row = def.per_entry ? corpus[task.row].id
                                            : def.row_name(task.row);
            res = fail(row, std::string("exception: ") + e.what());
        }
        ledger.cases[task.case_index].results[task.row] = std::move(res);
    });
    return ledger;
}

std::size_t Ledger::assert_failures() const {
    std::size_t n = 0;
    for (const CaseLedger& cl : cases) {
        if (cl.info.mode != CaseMode::assert_mode) continue;
        for (const CaseResult& r : cl.results)
            if (r.status == CaseStatus::fail) ++n;
    }
    return n;
}

std::size_t Ledger::observe_anomalies() const {
    std::size_t n = 0;
    for (const CaseLedger& cl : cases) {
        if (cl.info.mode != CaseMode::observe_mode) continue;
        for (const CaseResult& r : cl.results)
            if (r.status == CaseStatus::fail) ++n;
    }
    return n;
}

std::size_t Ledger::vacuous_total() const {
    std::size_t n = 0;
    for (const CaseLedger& cl : cases)
        for (const CaseResult& r : cl.results)
            if (r.status == CaseStatus::vacuous) ++n;
    return n;
}

bool Ledger::case_non_vacuous(const std::string& id) const {
    for (const CaseLedger& cl : cases)
        if (cl.info.id == id)
            for (const CaseResult& r : cl.results)
                if (r.status != CaseStatus::vacuous) return true;
    return false;
}

std::string ledger_to_json(const Ledger& ledger) {
    nlohmann::json out;
    out["cases"] = nlohmann::json::array();
    for (const CaseLedger& cl : ledger.cases) {
        nlohmann::json c;
        c["id"] = cl.info.id;
        c["mode"] = to_string(cl.info.mode);
        c["summary"] = cl.info.summary;
        c["results"] = nlohmann::json::array();
        for (const CaseResult& r : cl.results)
            c["results"].push_back({{"entry", r.entry},
                                    {"status", to_string(r.status)},
                                    {"detail", r.detail}});
        out["cases"].push_back(std::move(c));
    }
    out["summary"] = {{"assert-failures", ledger.assert_failures()},
                      {"observe-anomalies", ledger.observe_anomalies()},
                      {"vacuous", ledger.vacuous_total()}};
    return out.dump(2) + "\n";
}

std::string ledger_table(const Ledger& ledger) {
    std::ostringstream os;
    for (const CaseLedger& cl : ledger.cases) {
        std::size_t pass_n = 0, fail_n = 0, vac_n = 0;
        for (const CaseResult& r : cl.results) {
            if (r.status == CaseStatus::pass) ++pass_n;
            if (r.status == CaseStatus::fail) ++fail_n;
            if (r.status == CaseStatus::vacuous) ++vac_n;
        }
        os << cl.info.id << " [" << to_string(cl.info.mode) << "] pass="
           << pass_n << " fail=" << fail_n << " vacuous=" << vac_n << "\n";
        for (const CaseResult& r : cl.results)
            os << "  " << r.entry << ": " << to_string(r.status)
               << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    }
    os << "assert-failures=" << ledger.assert_failures()
       << " observe-anomalies=" << ledger.observe_anomalies()
       << " vacuous=" << ledger.vacuous_total() << "\n";
    return os.str();
}

}  // namespace ringatlas
