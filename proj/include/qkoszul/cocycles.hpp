#pragma once

#include <string>
#include <vector>

#include "cohomology.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "resolution.hpp"

namespace qkoszul {

// Section of the quotient map: a reduced monomial of A read back in B with
// the same exponents.
inline Monomial section_lift(const Monomial& m, const Presentation& pres) {
    for (int i = 0; i < pres.t; ++i)
        if (m.e[i] >= pres.N[i])
            throw NotReducedError("monomial " + m.str() + " is not an A-basis element");
    return m;
}

inline AlgebraElement lift_element(const AlgebraElement& f, const Presentation& pres) {
    AlgebraElement out(pres.n);
    for (const auto& [m, c] : f.terms()) out.add(section_lift(m, pres), c);
    return out;
}

// The coefficient of x_i^{N_i} (all other exponents zero) in a B-element.
// The defect variant reads x_i^{N_i - 1} instead.
inline LaurentScalar gamma_coefficient(int i, const AlgebraElement& f,
                                       const Presentation& pres,
                                       Defect defect = Defect::none) {
    if (i < 1 || i > pres.t) throw IndexError("cocycle index beyond the nilpotent block");
    int power = pres.N[i - 1] - (defect == Defect::zeta_coefficient_index ? 1 : 0);
    return f.coefficient(Monomial::power(pres.n, i, power));
}

// zeta~_i(r (x) s): the x_i^{N_i}-coefficient of the B-product rs.
inline LaurentScalar zeta_tilde(int i, const AlgebraElement& r, const AlgebraElement& s,
                                const Presentation& pres, Defect defect = Defect::none) {
    if (!r.is_augmented() || !s.is_augmented())
        throw NotAugmentedError("zeta~ arguments must lie in the augmentation ideal");
    return gamma_coefficient(i, multiply(r, s, pres, AlgebraMode::B), pres, defect);
}

// h_i(r): the x_i^{N_i}-coefficient of a single augmented B-element.
inline LaurentScalar h_cochain(int i, const AlgebraElement& r, const Presentation& pres) {
    if (!r.is_augmented())
        throw NotAugmentedError("h_i argument must lie in the augmentation ideal");
    return gamma_coefficient(i, r, pres);
}

// zeta_i on A: lift both arguments along the section, multiply in B, extract.
inline LaurentScalar zeta(int i, const Monomial& r, const Monomial& s,
                          const Presentation& pres, Defect defect = Defect::none) {
    if (r.is_identity() || s.is_identity())
        throw NotAugmentedError("zeta arguments must lie in the augmentation ideal");
    AlgebraElement rl = AlgebraElement::monomial_term(section_lift(r, pres), LaurentScalar(1));
    AlgebraElement sl = AlgebraElement::monomial_term(section_lift(s, pres), LaurentScalar(1));
    return gamma_coefficient(i, multiply(rl, sl, pres, AlgebraMode::B), pres, defect);
}

inline LaurentScalar zeta_element(int i, const AlgebraElement& f, const AlgebraElement& g,
                                  const Presentation& pres, Defect defect = Defect::none) {
    if (!f.is_augmented() || !g.is_augmented())
        throw NotAugmentedError("zeta arguments must lie in the augmentation ideal");
    return gamma_coefficient(
        i, multiply(lift_element(f, pres), lift_element(g, pres), pres, AlgebraMode::B),
        pres, defect);
}

// Element of the reduced bar complex in degree d: a combination of
// b_0 (x) b_1 (x) ... (x) b_d with b_0 in the algebra and b_1..b_d in the
// augmentation ideal, expanded over monomial slots.
struct BarElement {
    int n = 0;
    int degree = 0;
    std::map<std::vector<Monomial>, LaurentScalar> terms;

    BarElement() = default;
    BarElement(int n_, int degree_) : n(n_), degree(degree_) {}

    bool is_zero() const { return terms.empty(); }

    void add(const std::vector<Monomial>& slots, const LaurentScalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(slots.size()) != degree + 1)
            throw DegreeMismatchError("bar tensor has wrong slot count");
        for (int k = 1; k <= degree; ++k)
            if (slots[k].is_identity())
                throw NotAugmentedError("interior bar slot contains the identity");
        auto it = terms.find(slots);
        if (it == terms.end()) {
            terms.emplace(slots, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    BarElement& operator+=(const BarElement& o) {
        for (const auto& [slots, c] : o.terms) add(slots, c);
        return *this;
    }

    BarElement scaled(const LaurentScalar& s) const {
        BarElement out(n, degree);
        if (s.is_zero()) return out;
        for (const auto& [slots, c] : terms) out.add(slots, c * s);
        return out;
    }

    friend BarElement operator-(BarElement a, const BarElement& b) {
        for (const auto& [slots, c] : b.terms) a.add(slots, -c);
        return a;
    }

    friend bool operator==(const BarElement& a, const BarElement& b) {
        return a.n == b.n && a.degree == b.degree && a.terms == b.terms;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [slots, c] : terms) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*";
            for (std::size_t k = 0; k < slots.size(); ++k)
                out += (k ? "(x)" : "") + slots[k].str();
        }
        return out;
    }
};

// Expands algebra-element slots into monomial tensors. Interior slots must be
// augmented; constant parts there are rejected rather than silently dropped.
inline BarElement bar_tensor(const std::vector<AlgebraElement>& slots,
                             const Presentation& pres) {
    if (slots.empty() || slots.size() > 4)
        throw UnsupportedDegreeError("bar tensors supported in degrees 0..3");
    for (std::size_t k = 1; k < slots.size(); ++k)
        if (!slots[k].is_augmented())
            throw NotAugmentedError("interior bar slot is not augmented");

    BarElement out(pres.n, static_cast<int>(slots.size()) - 1);
    std::vector<Monomial> current(slots.size(), Monomial::identity(pres.n));
    auto rec = [&](auto&& self, std::size_t k, const LaurentScalar& c) -> void {
        if (k == slots.size()) {
            out.add(current, c);
            return;
        }
        for (const auto& [m, mc] : slots[k].terms()) {
            current[k] = m;
            self(self, k + 1, c * mc);
        }
    };
    rec(rec, 0, LaurentScalar(1));
    return out;
}

// Alternating sum of adjacent multiplications; products landing in interior
// slots are projected back to the augmentation ideal.
inline BarElement bar_differential(const BarElement& b, const Presentation& pres,
                                   AlgebraMode mode) {
    if (b.degree < 1 || b.degree > 3)
        throw UnsupportedDegreeError("bar differential supported in degrees 1..3");
    BarElement out(b.n, b.degree - 1);
    for (const auto& [slots, c] : b.terms) {
        for (int j = 0; j + 1 <= b.degree; ++j) {
            AlgebraElement prod =
                multiply(AlgebraElement::monomial_term(slots[j], LaurentScalar(1)),
                         AlgebraElement::monomial_term(slots[j + 1], LaurentScalar(1)),
                         pres, mode);
            if (j > 0) prod = prod.augmented_part();
            LaurentScalar sign = (j % 2 == 0) ? LaurentScalar(1) : LaurentScalar(-1);
            for (const auto& [pm, pc] : prod.terms()) {
                std::vector<Monomial> merged;
                merged.reserve(slots.size() - 1);
                for (int k = 0; k < j; ++k) merged.push_back(slots[k]);
                merged.push_back(pm);
                for (std::size_t k = j + 2; k < slots.size(); ++k)
                    merged.push_back(slots[k]);
                out.add(merged, c * pc * sign);
            }
        }
    }
    return out;
}

inline AlgebraElement algebra_from_bar0(const BarElement& b) {
    if (b.degree != 0) throw DegreeMismatchError("expected a degree-0 bar element");
    AlgebraElement out(b.n);
    for (const auto& [slots, c] : b.terms) out.add(slots[0], c);
    return out;
}

// Comparison maps into the reduced bar resolution of the quantum symmetric
// quotient: F_1(Phi(1_i)) = 1 (x) x_i,
// F_2(Phi(2_i)) = sum_a x_i^a (x) x_i (x) x_i^{N_i-a-1},
// F_2(Phi(1_i 1_j)) = 1 (x) x_j (x) x_i - q_ji (x) x_i (x) x_j for i < j.
inline BarElement F_map(const PhiGenerator& g, const Presentation& pres) {
    const int n = pres.n;
    if (g.degree() == 1) {
        int i = 0;
        for (int k = 0; k < n; ++k)
            if (g.a[k] == 1) i = k + 1;
        BarElement out(n, 1);
        out.add({Monomial::identity(n), Monomial::generator(n, i)}, LaurentScalar(1));
        return out;
    }
    if (g.degree() != 2) throw UnsupportedDegreeError("F maps cover degrees 1 and 2");

    BarElement out(n, 2);
    for (int k = 0; k < n; ++k) {
        if (g.a[k] == 2) {
            const int i = k + 1;
            if (i > pres.t)
                throw UnsupportedDegreeError("Phi entry 2 beyond the nilpotent block");
            const int Ni = pres.N[k];
            for (int a = 0; a <= Ni - 2; ++a)
                out.add({Monomial::power(n, i, a), Monomial::generator(n, i),
                         Monomial::power(n, i, Ni - a - 1)},
                        LaurentScalar(1));
            return out;
        }
    }
    int i = 0, j = 0;
    for (int k = 0; k < n; ++k)
        if (g.a[k] == 1) (i == 0 ? i : j) = k + 1;
    out.add({Monomial::identity(n), Monomial::generator(n, j), Monomial::generator(n, i)},
            LaurentScalar(1));
    out.add({Monomial::identity(n), Monomial::generator(n, i), Monomial::generator(n, j)},
            -pres.q(j, i));
    return out;
}

// F_1 extended S-linearly to a degree-1 element, for the square F_1 d = del_2 F_2.
inline BarElement F1_element(const ResolutionElement& e, const Presentation& pres) {
    BarElement out(pres.n, 1);
    for (const auto& [g, f] : e.terms()) {
        if (g.degree() != 1) throw DegreeMismatchError("F_1 needs a degree-1 element");
        int i = 0;
        for (int k = 0; k < pres.n; ++k)
            if (g.a[k] == 1) i = k + 1;
        for (const auto& [m, c] : f.terms())
            out.add({m, Monomial::generator(pres.n, i)}, c);
    }
    return out;
}

// del_1 F_1 = d on degree-1 generators and del_2 F_2 = F_1 d on degree-2
// generators, exactly, over the quantum symmetric quotient.
inline Report verify_F_squares(const Presentation& pres) {
    Report report("comparison-squares");
    for (const PhiGenerator& g : generators_in_degree(1, pres)) {
        AlgebraElement lhs =
            algebra_from_bar0(bar_differential(F_map(g, pres), pres, AlgebraMode::S));
        ResolutionElement dg = differential_generator(g, pres);
        AlgebraElement rhs(pres.n);
        for (const auto& [h, c] : dg.terms()) rhs += c;
        const std::string obj = "del_1 F_1 " + g.str();
        if (lhs == rhs)
            report.ok(obj);
        else
            report.fail(obj, element_str(lhs - rhs, pres));
    }
    for (const PhiGenerator& g : generators_in_degree(2, pres)) {
        BarElement lhs = bar_differential(F_map(g, pres), pres, AlgebraMode::S);
        BarElement rhs = F1_element(differential_generator(g, pres), pres);
        const std::string obj = "del_2 F_2 " + g.str();
        if (lhs == rhs)
            report.ok(obj);
        else
            report.fail(obj, (lhs - rhs).str());
    }
    return report;
}

// Pullback identifications: F_2^*(zeta_i) is dual to Phi(2_i) with value 1,
// and F_1^*(eta_i) is dual to Phi(1_i). Evaluated over Gr A.
inline Report verify_identifications(const Presentation& pres,
                                     Defect defect = Defect::none) {
    Report report("identifications");
    const Presentation gr = associated_graded(pres);

    for (int i = 1; i <= gr.t; ++i) {
        for (const PhiGenerator& g : generators_in_degree(2, gr)) {
            LaurentScalar value(0);
            BarElement f2 = F_map(g, gr);
            for (const auto& [slots, c] : f2.terms) {
                LaurentScalar eps = AlgebraElement::monomial_term(slots[0], LaurentScalar(1))
                                        .augmentation();
                if (eps.is_zero()) continue;
                AlgebraElement prod = multiply(
                    AlgebraElement::monomial_term(slots[1], LaurentScalar(1)),
                    AlgebraElement::monomial_term(slots[2], LaurentScalar(1)), gr,
                    AlgebraMode::B);
                value += c * eps * gamma_coefficient(i, prod, gr, defect);
            }
            bool diagonal = (g.a[i - 1] == 2);
            const std::string obj =
                "F_2^*(zeta" + std::to_string(i) + ") at " + g.str();
            bool good = diagonal ? value.is_one() : value.is_zero();
            if (good)
                report.ok(obj);
            else
                report.fail(obj, value.str());
        }
    }

    for (int i = 1; i <= gr.n; ++i) {
        for (const PhiGenerator& g : generators_in_degree(1, gr)) {
            BarElement f1 = F_map(g, gr);
            LaurentScalar value(0);
            for (const auto& [slots, c] : f1.terms) {
                LaurentScalar eps = AlgebraElement::monomial_term(slots[0], LaurentScalar(1))
                                        .augmentation();
                bool is_xi = (slots[1] == Monomial::generator(gr.n, i));
                if (!eps.is_zero() && is_xi) value += c * eps;
            }
            bool diagonal = (g.a[i - 1] == 1);
            const std::string obj =
                "F_1^*(eta" + std::to_string(i) + ") at " + g.str();
            bool good = diagonal ? value.is_one() : value.is_zero();
            if (good)
                report.ok(obj);
            else
                report.fail(obj, value.str());
        }
    }
    return report;
}

inline int default_cocycle_bound(const Presentation& pres) {
    return std::max(2 * pres.max_nilpotency(), 6);
}

// zeta~ associativity over B+, vanishing on the nilpotency ideal, and
// zeta associativity over A+ (products reduced in A, arguments lifted along
// the section). Bounds limit the total omega-weight of the factors.
inline Report verify_zeta_properties(int i, const Presentation& pres, long exp_bound,
                                     Defect defect = Defect::none) {
    if (i < 1 || i > pres.t) throw IndexError("cocycle index beyond the nilpotent block");
    Report report("zeta" + std::to_string(i) + " properties bound=" +
                  std::to_string(exp_bound));

    const std::vector<Monomial> all = monomials_of_weight_at_most(pres, exp_bound, 1);

    for (const Monomial& r : all)
        for (const Monomial& r1 : all) {
            long wr = pres.weight(r) + pres.weight(r1);
            if (wr >= exp_bound) continue;
            AlgebraElement re = AlgebraElement::monomial_term(r, LaurentScalar(1));
            AlgebraElement r1e = AlgebraElement::monomial_term(r1, LaurentScalar(1));
            for (const Monomial& s : all) {
                if (wr + pres.weight(s) > exp_bound) continue;
                AlgebraElement se = AlgebraElement::monomial_term(s, LaurentScalar(1));
                LaurentScalar lhs = zeta_tilde(
                    i, multiply(re, r1e, pres, AlgebraMode::B), se, pres, defect);
                LaurentScalar rhs = zeta_tilde(
                    i, re, multiply(r1e, se, pres, AlgebraMode::B), pres, defect);
                const std::string obj = "B-assoc (" + r.str() + "," + r1.str() + "," +
                                        s.str() + ")";
                if (lhs == rhs)
                    report.ok(obj);
                else
                    report.fail(obj, (lhs - rhs).str());
            }
        }

    for (int j = 1; j <= pres.t; ++j) {
        Monomial nil = Monomial::power(pres.n, j, pres.N[j - 1]);
        AlgebraElement nil_e = AlgebraElement::monomial_term(nil, LaurentScalar(1));
        for (const Monomial& b : monomials_of_weight_at_most(pres, exp_bound)) {
            AlgebraElement r = multiply(
                nil_e, AlgebraElement::monomial_term(b, LaurentScalar(1)), pres,
                AlgebraMode::B);
            for (const Monomial& c : all) {
                if (pres.weight(b) + pres.weight(c) > exp_bound) continue;
                AlgebraElement ce = AlgebraElement::monomial_term(c, LaurentScalar(1));
                LaurentScalar left = zeta_tilde(i, r, ce, pres, defect);
                LaurentScalar right = zeta_tilde(i, ce, r, pres, defect);
                const std::string obj = "ideal-vanish (x" + std::to_string(j) + "^" +
                                        std::to_string(pres.N[j - 1]) + "*" + b.str() +
                                        ", " + c.str() + ")";
                if (left.is_zero() && right.is_zero())
                    report.ok(obj);
                else
                    report.fail(obj, (left + right).str());
            }
        }
    }

    std::vector<Monomial> reduced;
    for (const Monomial& m : all) {
        bool ok = true;
        for (int k = 0; k < pres.t; ++k)
            if (m.e[k] >= pres.N[k]) ok = false;
        if (ok) reduced.push_back(m);
    }
    for (const Monomial& r : reduced)
        for (const Monomial& r1 : reduced) {
            long wr = pres.weight(r) + pres.weight(r1);
            if (wr >= exp_bound) continue;
            AlgebraElement re = AlgebraElement::monomial_term(r, LaurentScalar(1));
            AlgebraElement r1e = AlgebraElement::monomial_term(r1, LaurentScalar(1));
            for (const Monomial& s : reduced) {
                if (wr + pres.weight(s) > exp_bound) continue;
                AlgebraElement se = AlgebraElement::monomial_term(s, LaurentScalar(1));
                AlgebraElement rr1 = multiply(re, r1e, pres, AlgebraMode::A);
                AlgebraElement r1s = multiply(r1e, se, pres, AlgebraMode::A);
                LaurentScalar lhs = rr1.is_zero()
                                        ? LaurentScalar(0)
                                        : zeta_element(i, rr1, se, pres, defect);
                LaurentScalar rhs = r1s.is_zero()
                                        ? LaurentScalar(0)
                                        : zeta_element(i, re, r1s, pres, defect);
                const std::string obj = "A-assoc (" + r.str() + "," + r1.str() + "," +
                                        s.str() + ")";
                if (lhs == rhs)
                    report.ok(obj);
                else
                    report.fail(obj, (lhs - rhs).str());
            }
        }
    return report;
}

// zeta~_i = -delta^* h_i on B: checked through the bar machinery so the sign
// bookkeeping of the differential is exercised.
inline Report verify_coboundary_on_B(int i, const Presentation& pres, long exp_bound,
                                     Defect defect = Defect::none) {
    if (i < 1 || i > pres.t) throw IndexError("cocycle index beyond the nilpotent block");
    Report report("coboundary zeta" + std::to_string(i) + " bound=" +
                  std::to_string(exp_bound));
    const std::vector<Monomial> all = monomials_of_weight_at_most(pres, exp_bound, 1);
    for (const Monomial& r : all)
        for (const Monomial& s : all) {
            if (pres.weight(r) + pres.weight(s) > exp_bound) continue;
            AlgebraElement re = AlgebraElement::monomial_term(r, LaurentScalar(1));
            AlgebraElement se = AlgebraElement::monomial_term(s, LaurentScalar(1));
            LaurentScalar lhs = zeta_tilde(i, re, se, pres, defect);

            BarElement tensor = bar_tensor({AlgebraElement::one(pres.n), re, se}, pres);
            BarElement boundary = bar_differential(tensor, pres, AlgebraMode::B);
            LaurentScalar pullback(0);
            for (const auto& [slots, c] : boundary.terms) {
                LaurentScalar eps = AlgebraElement::monomial_term(slots[0], LaurentScalar(1))
                                        .augmentation();
                if (eps.is_zero()) continue;
                pullback += c * eps *
                            gamma_coefficient(
                                i, AlgebraElement::monomial_term(slots[1], LaurentScalar(1)),
                                pres);
            }
            const std::string obj = "(" + r.str() + "," + s.str() + ")";
            if (lhs == -pullback)
                report.ok(obj);
            else
                report.fail(obj, (lhs + pullback).str());
        }
    return report;
}

// The omega-filtration degree of x_i^{N_i}; zeta_i sits in bidegree
// (p_i, 2 - p_i).
inline long filtration_degree(int i, const Presentation& pres) {
    if (i < 1 || i > pres.t) throw IndexError("filtration degree requires i <= t");
    return static_cast<long>(pres.N[i - 1]) * pres.omega[i - 1];
}

}  // namespace qkoszul
