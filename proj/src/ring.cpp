#include "ringatlas/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ringatlas {

std::string AxiomViolation::to_string() const {
    std::ostringstream os;
    os << "axiom violated: " << axiom;
    if (!elements.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (i) os << ", ";
            os << elements[i];
        }
        os << ")";
    }
    if (!detail.empty()) os << " — " << detail;
    return os.str();
}

namespace {

std::optional<AxiomViolation> check_shape(const FiniteRing::Table& t,
                                          std::size_t n, const char* which) {
    if (t.size() != n)
        return AxiomViolation{std::string(which) + "-table-shape", {},
                              "table is not n rows"};
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n)
            return AxiomViolation{std::string(which) + "-table-shape",
                                  {Elem(i)},
                                  "row has wrong length"};
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j] >= n)
                return AxiomViolation{std::string(which) + "-entry-range",
                                      {Elem(i), Elem(j)},
                                      "entry out of range"};
    }
    return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> FiniteRing::check_axioms(const Table& add,
                                                       const Table& mul,
                                                       Elem zero, Elem one) {
    const std::size_t n = add.size();
    if (n < 2)
        return AxiomViolation{"order", {}, "ring must have order >= 2"};
    if (n > order_cap)
        return AxiomViolation{"order", {}, "order exceeds cap"};
    if (auto v = check_shape(add, n, "add")) return v;
    if (auto v = check_shape(mul, n, "mul")) return v;
    if (zero >= n || one >= n)
        return AxiomViolation{"constants-range", {zero, one},
                              "zero/one out of range"};
    if (zero == one)
        return AxiomViolation{"zero-one-distinct", {zero}, "zero equals one"};

    for (std::size_t a = 0; a < n; ++a)
        if (add[zero][a] != a || add[a][zero] != a)
            return AxiomViolation{"add-identity", {Elem(a)},
                                  "zero is not an additive identity"};
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < n; ++b)
            if (add[a][b] == zero) { has_inverse = true; break; }
        if (!has_inverse)
            return AxiomViolation{"add-inverse", {Elem(a)},
                                  "element has no additive inverse"};
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (add[a][b] != add[b][a])
                return AxiomViolation{"add-commutativity", {Elem(a), Elem(b)},
                                      "a+b != b+a"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    return AxiomViolation{
                        "add-associativity", {Elem(a), Elem(b), Elem(c)},
                        "(a+b)+c != a+(b+c)"};

    // Identity before associativity: a patched identity row is reported as
    // such, not as a downstream associativity failure.
    for (std::size_t a = 0; a < n; ++a)
        if (mul[one][a] != a || mul[a][one] != a)
            return AxiomViolation{"one-identity", {Elem(a)},
                                  "one is not a two-sided identity"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    return AxiomViolation{
                        "mul-associativity", {Elem(a), Elem(b), Elem(c)},
                        "(ab)c != a(bc)"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                    return AxiomViolation{
                        "left-distributivity", {Elem(a), Elem(b), Elem(c)},
                        "a(b+c) != ab+ac"};
                if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
                    return AxiomViolation{
                        "right-distributivity", {Elem(a), Elem(b), Elem(c)},
                        "(a+b)c != ac+bc"};
            }
    return std::nullopt;
}

FiniteRing::FiniteRing(std::string name, const Table& add, const Table& mul,
                       Elem zero, Elem one)
    : name_(std::move(name)), n_(add.size()), zero_(zero), one_(one) {
    add_.resize(n_ * n_);
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            add_[a * n_ + b] = add[a][b];
            mul_[a * n_ + b] = mul[a][b];
        }
    neg_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (add_[a * n_ + b] == zero_) { neg_[a] = Elem(b); break; }
    central_.assign(n_, 1);
    commutative_ = true;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (mul_[a * n_ + b] != mul_[b * n_ + a]) {
                central_[a] = 0;
                commutative_ = false;
            }
}

FiniteRing FiniteRing::validated(std::string name, const Table& add,
                                 const Table& mul, Elem zero, Elem one) {
    if (auto v = check_axioms(add, mul, zero, one)) throw RingError(*v);
    return FiniteRing(std::move(name), add, mul, zero, one);
}

FiniteRing FiniteRing::trusted(std::string name, const Table& add,
                               const Table& mul, Elem zero, Elem one) {
    if (add.size() < 2 || add.size() > order_cap)
        throw RingError(AxiomViolation{"order", {}, "order out of range"});
    return FiniteRing(std::move(name), add, mul, zero, one);
}

FiniteRing::Table FiniteRing::add_table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) t[a][b] = add_[a * n_ + b];
    return t;
}

FiniteRing::Table FiniteRing::mul_table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul_[a * n_ + b];
    return t;
}

bool FiniteRing::same_structure(const FiniteRing& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
}

RingPtr make_validated(std::string name, const FiniteRing::Table& add,
                       const FiniteRing::Table& mul, Elem zero, Elem one) {
    return std::make_shared<const FiniteRing>(
        FiniteRing::validated(std::move(name), add, mul, zero, one));
}

RingPtr make_trusted(std::string name, const FiniteRing::Table& add,
                     const FiniteRing::Table& mul, Elem zero, Elem one) {
    return std::make_shared<const FiniteRing>(
        FiniteRing::trusted(std::move(name), add, mul, zero, one));
}

bool ElementSet::contains(Elem a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

ElementSet ElementSet::from_mask(const std::vector<std::uint8_t>& mask) {
    ElementSet s;
    for (std::size_t a = 0; a < mask.size(); ++a)
        if (mask[a]) s.members.push_back(Elem(a));
    return s;
}

ElementSet center(const FiniteRing& r) {
    std::vector<std::uint8_t> mask(r.order(), 0);
    for (std::size_t a = 0; a < r.order(); ++a)
        mask[a] = r.is_central(Elem(a)) ? 1 : 0;
    return ElementSet::from_mask(mask);
}

ElementSet idempotents(const FiniteRing& r) {
    ElementSet s;
    for (std::size_t a = 0; a < r.order(); ++a)
        if (r.mul(Elem(a), Elem(a)) == Elem(a)) s.members.push_back(Elem(a));
    return s;
}

ElementSet units(const FiniteRing& r) {
    const std::size_t n = r.order();
    ElementSet s;
    for (std::size_t a = 0; a < n; ++a) {
        bool unit = false;
        for (std::size_t b = 0; b < n; ++b)
            if (r.mul(Elem(a), Elem(b)) == r.one() &&
                r.mul(Elem(b), Elem(a)) == r.one()) {
                unit = true;
                break;
            }
        if (unit) s.members.push_back(Elem(a));
    }
    return s;
}

ElementSet nilpotents(const FiniteRing& r) {
    const std::size_t n = r.order();
    ElementSet s;
    for (std::size_t a = 0; a < n; ++a) {
        // powers of a eventually cycle; nilpotent iff 0 shows up
        std::vector<std::uint8_t> seen(n, 0);
        Elem p = Elem(a);
        bool nil = false;
        while (!seen[p]) {
            if (r.is_zero(p)) { nil = true; break; }
            seen[p] = 1;
            p = r.mul(p, Elem(a));
        }
        if (nil || r.is_zero(p)) s.members.push_back(Elem(a));
    }
    return s;
}

ElementSet regular_elements(const FiniteRing& r) {
    const std::size_t n = r.order();
    ElementSet s;
    for (std::size_t a = 0; a < n; ++a) {
        bool regular = true;
        for (std::size_t b = 0; b < n && regular; ++b) {
            if (r.is_zero(Elem(b))) continue;
            if (r.is_zero(r.mul(Elem(a), Elem(b))) ||
                r.is_zero(r.mul(Elem(b), Elem(a))))
                regular = false;
        }
        if (regular) s.members.push_back(Elem(a));
    }
    return s;
}

ElementSet right_annihilator(const FiniteRing& r, std::span<const Elem> xs) {
    if (xs.empty())
        throw std::invalid_argument("right_annihilator: empty set");
    const std::size_t n = r.order();
    ElementSet s;
    for (std::size_t b = 0; b < n; ++b) {
        bool kills = true;
        for (Elem x : xs)
            if (!r.is_zero(r.mul(x, Elem(b)))) { kills = false; break; }
        if (kills) s.members.push_back(Elem(b));
    }
    if (!is_right_ideal(r, s))
        throw std::logic_error("right_annihilator: result not a right ideal");
    return s;
}

ElementSet principal_right_ideal(const FiniteRing& r, Elem e) {
    std::vector<std::uint8_t> mask(r.order(), 0);
    for (std::size_t b = 0; b < r.order(); ++b) mask[r.mul(e, Elem(b))] = 1;
    return ElementSet::from_mask(mask);
}

bool is_right_ideal(const FiniteRing& r, const ElementSet& s) {
    for (Elem a : s.members) {
        for (Elem b : s.members)
            if (!s.contains(r.add(a, b))) return false;
        for (std::size_t x = 0; x < r.order(); ++x)
            if (!s.contains(r.mul(a, Elem(x)))) return false;
    }
    return s.contains(r.zero());
}

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
    if (!is_right_ideal(r, s)) return false;
    for (Elem a : s.members)
        for (std::size_t x = 0; x < r.order(); ++x)
            if (!s.contains(r.mul(Elem(x), a))) return false;
    return true;
}

ElementSet principal_two_sided_ideal(const FiniteRing& r, Elem a) {
    const std::size_t n = r.order();
    std::vector<std::uint8_t> mask(n, 0);
    mask[r.zero()] = 1;
    mask[a] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!mask[x]) continue;
            for (std::size_t y = 0; y < n; ++y) {
                Elem v[3] = {r.add(Elem(x), Elem(y)), r.mul(Elem(x), Elem(y)),
                             r.mul(Elem(y), Elem(x))};
                // sums only within the set; products against the whole ring
                if (mask[y] && !mask[v[0]]) { mask[v[0]] = 1; grew = true; }
                if (!mask[v[1]]) { mask[v[1]] = 1; grew = true; }
                if (!mask[v[2]]) { mask[v[2]] = 1; grew = true; }
            }
        }
    }
    return ElementSet::from_mask(mask);
}

std::vector<ElementSet> all_two_sided_ideals(const FiniteRing& r) {
    std::set<std::vector<Elem>> seen;
    std::vector<ElementSet> out;
    auto push = [&](ElementSet s) {
        if (seen.insert(s.members).second) out.push_back(std::move(s));
    };
    for (std::size_t a = 0; a < r.order(); ++a)
        push(principal_two_sided_ideal(r, Elem(a)));
    // close under ideal sum; every ideal is a sum of principal ideals
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<std::uint8_t> mask(r.order(), 0);
            for (Elem x : out[i].members)
                for (Elem y : out[j].members) mask[r.add(x, y)] = 1;
            push(ElementSet::from_mask(mask));
        }
    std::sort(out.begin(), out.end(), [](const ElementSet& a,
                                         const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

}  // namespace ringatlas
