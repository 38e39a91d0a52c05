#include "ringatlas/constructions.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ringatlas {

namespace {

RingPtr build(std::string name, const FiniteRing::Table& add,
              const FiniteRing::Table& mul, Elem zero, Elem one,
              BuildCheck check) {
    return check == BuildCheck::validate
               ? make_validated(std::move(name), add, mul, zero, one)
               : make_trusted(std::move(name), add, mul, zero, one);
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > FiniteRing::order_cap)
            throw RingError({"order", {}, "construction exceeds order cap"});
    }
    return v;
}

using TupleMul = std::function<std::vector<Elem>(const FiniteRing&,
                                                 const std::vector<Elem>&,
                                                 const std::vector<Elem>&)>;

TupleRing tuple_ring(const RingPtr& base, std::size_t arity, std::string name,
                     const std::vector<Elem>& one_tuple, const TupleMul& mul_fn,
                     BuildCheck check) {
    const std::size_t n = base->order();
    const std::size_t order = checked_power(n, arity);
    TupleRing t;
    t.base = base;
    t.arity = arity;

    auto decode = [&](std::size_t x) {
        std::vector<Elem> tup(arity);
        for (std::size_t i = arity; i-- > 0;) {
            tup[i] = Elem(x % n);
            x /= n;
        }
        return tup;
    };
    auto encode = [&](const std::vector<Elem>& tup) {
        std::size_t x = 0;
        for (Elem v : tup) x = x * n + v;
        return Elem(x);
    };

    FiniteRing::Table add(order, std::vector<Elem>(order));
    FiniteRing::Table mul(order, std::vector<Elem>(order));
    for (std::size_t a = 0; a < order; ++a) {
        const std::vector<Elem> ta = decode(a);
        for (std::size_t b = 0; b < order; ++b) {
            const std::vector<Elem> tb = decode(b);
            std::vector<Elem> sum(arity);
            for (std::size_t i = 0; i < arity; ++i)
                sum[i] = base->add(ta[i], tb[i]);
            add[a][b] = encode(sum);
            mul[a][b] = encode(mul_fn(*base, ta, tb));
        }
    }
    std::vector<Elem> zero_tuple(arity, base->zero());
    t.ring = build(std::move(name), add, mul, encode(zero_tuple),
                   encode(one_tuple), check);
    return t;
}

}  // namespace

Elem TupleRing::encode(const std::vector<Elem>& tuple) const {
    std::size_t x = 0;
    for (Elem v : tuple) x = x * base->order() + v;
    return Elem(x);
}

std::vector<Elem> TupleRing::decode(Elem x) const {
    std::vector<Elem> tup(arity);
    std::size_t v = x;
    for (std::size_t i = arity; i-- > 0;) {
        tup[i] = Elem(v % base->order());
        v /= base->order();
    }
    return tup;
}

RingPtr zmod(unsigned n, BuildCheck check) {
    if (n < 2 || n > FiniteRing::order_cap)
        throw RingError({"order", {}, "zmod order out of range"});
    FiniteRing::Table add(n, std::vector<Elem>(n)), mul(n,
                                                        std::vector<Elem>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            add[a][b] = Elem((a + b) % n);
            mul[a][b] = Elem((a * b) % n);
        }
    return build("Z" + std::to_string(n), add, mul, 0, 1, check);
}

RingPtr gf4(BuildCheck check) {
    FiniteRing::Table add(4, std::vector<Elem>(4)), mul(4,
                                                        std::vector<Elem>(4));
    // w^2 = w + 1
    const Elem m[4][4] = {{0, 0, 0, 0},
                          {0, 1, 2, 3},
                          {0, 2, 3, 1},
                          {0, 3, 1, 2}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            add[a][b] = Elem(a ^ b);
            mul[a][b] = m[a][b];
        }
    return build("GF4", add, mul, 0, 1, check);
}

RingMap gf4_frobenius(const RingPtr& f4) {
    std::vector<Elem> img(4);
    for (Elem a = 0; a < 4; ++a) img[a] = f4->mul(a, a);
    return RingMap::verified(f4, f4, std::move(img), "frob");
}

Elem DirectProduct::pair(Elem a, Elem b) const {
    return Elem(std::size_t(a) * right->order() + b);
}

std::pair<Elem, Elem> DirectProduct::split(Elem x) const {
    return {Elem(x / right->order()), Elem(x % right->order())};
}

RingMap DirectProduct::projection_left() const {
    std::vector<Elem> img(ring->order());
    for (std::size_t x = 0; x < img.size(); ++x)
        img[x] = split(Elem(x)).first;
    return RingMap::verified(ring, left, std::move(img), "pr1");
}

RingMap DirectProduct::projection_right() const {
    std::vector<Elem> img(ring->order());
    for (std::size_t x = 0; x < img.size(); ++x)
        img[x] = split(Elem(x)).second;
    return RingMap::verified(ring, right, std::move(img), "pr2");
}

DirectProduct direct_product(const RingPtr& a, const RingPtr& b,
                             std::string name, BuildCheck check) {
    const std::size_t na = a->order(), nb = b->order();
    if (na * nb > FiniteRing::order_cap)
        throw RingError({"order", {}, "product exceeds order cap"});
    const std::size_t order = na * nb;
    FiniteRing::Table add(order, std::vector<Elem>(order));
    FiniteRing::Table mul(order, std::vector<Elem>(order));
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            Elem xa = Elem(x / nb), xb = Elem(x % nb);
            Elem ya = Elem(y / nb), yb = Elem(y % nb);
            add[x][y] = Elem(std::size_t(a->add(xa, ya)) * nb + b->add(xb, yb));
            mul[x][y] = Elem(std::size_t(a->mul(xa, ya)) * nb + b->mul(xb, yb));
        }
    if (name.empty()) name = a->name() + "x" + b->name();
    Elem zero = Elem(std::size_t(a->zero()) * nb + b->zero());
    Elem one = Elem(std::size_t(a->one()) * nb + b->one());
    DirectProduct p;
    p.left = a;
    p.right = b;
    p.ring = build(std::move(name), add, mul, zero, one, check);
    return p;
}

RingMap swap_automorphism(const DirectProduct& p) {
    if (!p.left->same_structure(*p.right))
        throw MapError({"shape", {}});
    std::vector<Elem> img(p.ring->order());
    for (std::size_t x = 0; x < img.size(); ++x) {
        auto [a, b] = p.split(Elem(x));
        img[x] = p.pair(b, a);
    }
    return RingMap::verified(p.ring, p.ring, std::move(img), "swap");
}

RingMap componentwise_map(const DirectProduct& p, const RingMap& f,
                          const RingMap& g) {
    std::vector<Elem> img(p.ring->order());
    for (std::size_t x = 0; x < img.size(); ++x) {
        auto [a, b] = p.split(Elem(x));
        img[x] = p.pair(f(a), g(b));
    }
    std::string label = "(" + f.label() + "," + g.label() + ")";
    return RingMap::verified(p.ring, p.ring, std::move(img), std::move(label));
}

TupleRing matrix_ring(const RingPtr& r, std::size_t dim, std::string name,
                      BuildCheck check) {
    if (name.empty())
        name = "M" + std::to_string(dim) + "(" + r->name() + ")";
    std::vector<Elem> one(dim * dim, r->zero());
    for (std::size_t i = 0; i < dim; ++i) one[i * dim + i] = r->one();
    return tuple_ring(
        r, dim * dim, std::move(name), one,
        [dim](const FiniteRing& base, const std::vector<Elem>& a,
              const std::vector<Elem>& b) {
            std::vector<Elem> c(dim * dim, base.zero());
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    Elem acc = base.zero();
                    for (std::size_t k = 0; k < dim; ++k)
                        acc = base.add(
                            acc, base.mul(a[i * dim + k], b[k * dim + j]));
                    c[i * dim + j] = acc;
                }
            return c;
        },
        check);
}

std::size_t triangular_slot(std::size_t dim, std::size_t i, std::size_t j) {
    if (i > j || j >= dim) throw std::out_of_range("triangular_slot");
    std::size_t slot = 0;
    for (std::size_t row = 0; row < i; ++row) slot += dim - row;
    return slot + (j - i);
}

TupleRing upper_triangular(const RingPtr& r, std::size_t dim, std::string name,
                           BuildCheck check) {
    if (name.empty())
        name = "T" + std::to_string(dim) + "(" + r->name() + ")";
    const std::size_t arity = dim * (dim + 1) / 2;
    std::vector<Elem> one(arity, r->zero());
    for (std::size_t i = 0; i < dim; ++i)
        one[triangular_slot(dim, i, i)] = r->one();
    return tuple_ring(
        r, arity, std::move(name), one,
        [dim](const FiniteRing& base, const std::vector<Elem>& a,
              const std::vector<Elem>& b) {
            std::vector<Elem> c(dim * (dim + 1) / 2, base.zero());
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i; j < dim; ++j) {
                    Elem acc = base.zero();
                    for (std::size_t k = i; k <= j; ++k)
                        acc = base.add(
                            acc,
                            base.mul(a[triangular_slot(dim, i, k)],
                                     b[triangular_slot(dim, k, j)]));
                    c[triangular_slot(dim, i, j)] = acc;
                }
            return c;
        },
        check);
}

TupleRing constant_diagonal_subring(const RingPtr& r, std::string name,
                                    BuildCheck check) {
    if (name.empty()) name = "S3(" + r->name() + ")";
    // (a, b, c, d) stands for (a b c; 0 a d; 0 0 a)
    std::vector<Elem> one = {r->one(), r->zero(), r->zero(), r->zero()};
    return tuple_ring(
        r, 4, std::move(name), one,
        [](const FiniteRing& base, const std::vector<Elem>& x,
           const std::vector<Elem>& y) {
            auto [a, b, c, d] = std::tie(x[0], x[1], x[2], x[3]);
            auto [a2, b2, c2, d2] = std::tie(y[0], y[1], y[2], y[3]);
            std::vector<Elem> out(4);
            out[0] = base.mul(a, a2);
            out[1] = base.add(base.mul(a, b2), base.mul(b, a2));
            out[2] = base.add(base.add(base.mul(a, c2), base.mul(b, d2)),
                              base.mul(c, a2));
            out[3] = base.add(base.mul(a, d2), base.mul(d, a2));
            return out;
        },
        check);
}

RingMap entrywise_map(const TupleRing& t, const RingMap& alpha,
                      std::string label) {
    std::vector<Elem> img(t.ring->order());
    for (std::size_t x = 0; x < img.size(); ++x) {
        std::vector<Elem> tup = t.decode(Elem(x));
        for (Elem& v : tup) v = alpha(v);
        img[x] = t.encode(tup);
    }
    if (label.empty()) label = alpha.label() + "~";
    return RingMap::verified(t.ring, t.ring, std::move(img), std::move(label));
}

TrivialExtension trivial_extension(const RingPtr& r, const RingMap& alpha,
                                   BuildCheck check) {
    TupleRing ext = tuple_ring(
        r, 2, "T(" + r->name() + "," + r->name() + ")",
        {r->one(), r->zero()},
        [](const FiniteRing& base, const std::vector<Elem>& x,
           const std::vector<Elem>& y) {
            return std::vector<Elem>{
                base.mul(x[0], y[0]),
                base.add(base.mul(x[0], y[1]), base.mul(x[1], y[0]))};
        },
        check);
    RingMap twist = entrywise_map(ext, alpha, alpha.label() + "~");
    return TrivialExtension{std::move(ext), std::move(twist)};
}

namespace {

RingMap negate_slot_map(const TupleRing& t, std::size_t slot,
                        std::string label) {
    std::vector<Elem> img(t.ring->order());
    for (std::size_t x = 0; x < img.size(); ++x) {
        std::vector<Elem> tup = t.decode(Elem(x));
        tup[slot] = t.base->neg(tup[slot]);
        img[x] = t.encode(tup);
    }
    return RingMap::verified(t.ring, t.ring, std::move(img), std::move(label));
}

std::vector<Fixture> build_catalog() {
    std::vector<Fixture> out;

    const RingPtr z2 = zmod(2);
    const RingPtr z3 = zmod(3);
    const RingPtr z4 = zmod(4);

    // square of a commutative ring with the component swap
    {
        DirectProduct p = direct_product(z2, z2);
        Fixture fx("EX1-swap", p.ring, swap_automorphism(p),
                   "Z2xZ2 with the component swap automorphism");
        fx.expected = {{"skew-armendariz", false},
                       {"central-skew-armendariz", true}};
        // f = (1,0) - (1,0)x, g = (0,1) + (1,0)x; the (1,0) product is
        // (1,0)*swap((0,1)) = (1,0), nonzero
        Elem e10 = p.pair(1, 0), e01 = p.pair(0, 1);
        fx.pair = FixturePair{
            {e10, p.ring->neg(e10)}, {e01, e10}, 1, 0, e10, true, false};
        out.push_back(std::move(fx));
    }

    // pairs (a, b) over Z4 as matrices (a b; 0 a), with b -> -b
    {
        TrivialExtension t = trivial_extension(z4, RingMap::identity(z4));
        Fixture fx("EX2-z4mat", t.ext.ring, negate_slot_map(t.ext, 1, "neg-b"),
                   "order-16 ring of matrices (a b; 0 a) over Z4, twist "
                   "negates b");
        fx.expected = {{"skew-armendariz", false},
                       {"central-skew-armendariz", true}};
        Elem a0 = t.ext.encode({2, 0}), a1 = t.ext.encode({2, 1});
        // (a0 + a1 x)^2 = 0; a1 * twist(a0) = (0 2; 0 0)
        fx.pair = FixturePair{
            {a0, a1}, {a0, a1}, 1, 0, t.ext.encode({0, 2}), true, false};
        out.push_back(std::move(fx));
    }

    // diagonal pairs over Z2xZ2 with the entry swap; moves an idempotent
    {
        DirectProduct a = direct_product(z2, z2);
        DirectProduct d =
            direct_product(a.ring, a.ring, "(Z2xZ2)x(Z2xZ2)");
        Fixture fx("EX3-diag-swap", d.ring, swap_automorphism(d),
                   "diagonal matrices over Z2xZ2 with the entry swap; "
                   "commutative but the twist moves an idempotent");
        fx.expected = {{"central-skew-armendariz", true},
                       {"fixes-idempotents", false}};
        fx.moved_idempotent = d.pair(a.pair(1, 0), a.pair(0, 1));
        out.push_back(std::move(fx));
    }

    // the same order-16 ring with the identity twist: commutative, central,
    // but its base Z4 is not rigid
    {
        TrivialExtension t = trivial_extension(z4, RingMap::identity(z4));
        Fixture fx("EX4-T4z4", t.ext.ring, RingMap::identity(t.ext.ring),
                   "trivial extension T(Z4,Z4), identity twist");
        fx.expected = {{"central-skew-armendariz", true},
                       {"reduced", false},
                       {"rigid", false}};
        out.push_back(std::move(fx));
    }

    // upper triangular 2x2 over a field, corner negation; over Z2 the twist
    // degenerates to the identity and plain central Armendariz fails
    for (const RingPtr& field : {z2, z3}) {
        TupleRing t2 = upper_triangular(field, 2);
        Fixture fx(field->order() == 2 ? "EX5-T2F2" : "EX5-T2F3", t2.ring,
                   negate_slot_map(t2, triangular_slot(2, 0, 1), "neg-b"),
                   "T2(" + field->name() + ") with corner negation");
        fx.expected = {{"central-skew-armendariz", false}};
        if (field->order() == 2)
            fx.expected.push_back({"central-armendariz", false});
        // f = e11 + (e11+e12)x, g = -e22 + (e12+e22)x;
        // (e11+e12)*twist(-e22) = -e12, not central
        Elem e11 = t2.encode({1, 0, 0});
        Elem ne22 = t2.encode({0, 0, field->neg(1)});
        Elem f1 = t2.encode({1, 1, 0});
        Elem g1 = t2.encode({0, 1, 1});
        Elem prod = t2.encode({0, field->neg(1), 0});
        fx.pair = FixturePair{{e11, f1}, {ne22, g1}, 1, 0, prod, true, true};
        out.push_back(std::move(fx));
    }

    // full 2x2 matrices over Z2: the classic non-abelian ring
    {
        TupleRing m2 = matrix_ring(z2, 2);
        Fixture fx("M2Z2", m2.ring, RingMap::identity(m2.ring),
                   "M2(Z2), identity twist");
        fx.expected = {{"abelian", false},
                       {"central-armendariz", false},
                       {"central-skew-armendariz", false},
                       {"prime", true},
                       {"baer", true}};
        out.push_back(std::move(fx));
    }

    // T2(Z2) with the identity twist
    {
        TupleRing t2 = upper_triangular(z2, 2);
        Fixture fx("T2Z2", t2.ring, RingMap::identity(t2.ring),
                   "T2(Z2), identity twist");
        fx.expected = {{"armendariz", false},
                       {"central-armendariz", false},
                       {"abelian", false},
                       {"right-pp", true}};
        out.push_back(std::move(fx));
    }

    // constant-diagonal 3x3 subring over Z2
    {
        TupleRing s = constant_diagonal_subring(z2);
        Fixture fx("S4Z2", s.ring, RingMap::identity(s.ring),
                   "constant-diagonal 3x3 upper triangular subring over Z2");
        fx.expected = {{"skew-armendariz", true, true},
                       {"central-skew-armendariz", true, true}};
        out.push_back(std::move(fx));
    }

    auto plain = [&](const RingPtr& r, std::string id, std::string desc,
                     std::vector<ExpectedAssertion> expected) {
        Fixture fx(std::move(id), r, RingMap::identity(r), std::move(desc));
        fx.expected = std::move(expected);
        out.push_back(std::move(fx));
    };

    plain(z2, "Z2", "the field Z2",
          {{"reduced", true},
           {"armendariz", true},
           {"right-pp", true},
           {"baer", true},
           {"prime", true},
           {"rigid", true}});
    plain(z3, "Z3", "the field Z3",
          {{"reduced", true}, {"prime", true}, {"rigid", true}});
    plain(z4, "Z4", "Z4",
          {{"reduced", false},
           {"central-armendariz", true},
           {"right-pp", false},
           {"rigid", false}});
    plain(zmod(6), "Z6", "Z6, reduced but not a domain",
          {{"reduced", true},
           {"abelian", true},
           {"armendariz", true},
           {"right-pp", true},
           {"baer", true}});

    {
        RingPtr f4 = gf4();
        Fixture fx("GF4-frob", f4, gf4_frobenius(f4),
                   "the field GF4 with the squaring automorphism");
        fx.expected = {{"prime", true},
                       {"reduced", true},
                       {"rigid", true},
                       {"skew-armendariz", true}};
        out.push_back(std::move(fx));
    }

    {
        TrivialExtension t = trivial_extension(z2, RingMap::identity(z2));
        Fixture fx("TX2Z2", t.ext.ring, RingMap::identity(t.ext.ring),
                   "T(Z2,Z2), i.e. Z2[x]/<x^2>");
        fx.expected = {{"central-skew-armendariz", true},
                       {"reduced", false},
                       {"right-pp", false}};
        out.push_back(std::move(fx));
    }

    {
        TupleRing t2 = upper_triangular(z2, 2);
        DirectProduct p = direct_product(z2, t2.ring);
        Fixture fx("PROD-Z2-T2Z2", p.ring, RingMap::identity(p.ring),
                   "Z2 x T2(Z2), identity twist");
        fx.expected = {{"central-skew-armendariz", false},
                       {"abelian", false}};
        out.push_back(std::move(fx));
    }

    return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> catalog = build_catalog();
    return catalog;
}

const Fixture& paper_fixture(const std::string& id) {
    for (const Fixture& fx : fixture_catalog())
        if (fx.id == id) return fx;
    throw std::out_of_range("unknown fixture: " + id);
}

}  // namespace ringatlas
