#pragma once

#include <map>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "report.hpp"

namespace qkoszul {

// Test hooks for negative controls: deliberately corrupted variants of the
// maps, used to demonstrate that the verification sweeps can fail.
enum class Defect {
    none,
    d_scalar_exponent,     // off-by-one q-exponent in the differential
    xi_scalar_exponent,    // off-by-one q-exponent in the degree-2 chain maps
    zeta_coefficient_index // cocycle reads the coefficient of x_i^{N_i - 1}
};

// Free generator Phi(a_1, ..., a_n) in homological degree a_1 + ... + a_n.
// Entries beyond the nilpotent block are restricted to {0, 1}.
struct PhiGenerator {
    std::vector<int> a;

    auto operator<=>(const PhiGenerator&) const = default;

    int degree() const {
        int d = 0;
        for (int k : a) d += k;
        return d;
    }

    std::string str() const {
        std::string out = "Phi(";
        for (std::size_t i = 0; i < a.size(); ++i)
            out += (i ? "," : "") + std::to_string(a[i]);
        return out + ")";
    }
};

inline bool valid_generator(const PhiGenerator& g, const Presentation& pres) {
    if (static_cast<int>(g.a.size()) != pres.n) return false;
    for (int i = 0; i < pres.n; ++i) {
        if (g.a[i] < 0) return false;
        if (i >= pres.t && g.a[i] > 1) return false;
    }
    return true;
}

// Element of the free module K_m: finite sum of S-coefficients times
// generators, all of one homological degree.
class ResolutionElement {
  public:
    ResolutionElement() = default;
    explicit ResolutionElement(int n) : n_(n) {}

    static ResolutionElement zero(int n) { return ResolutionElement(n); }

    static ResolutionElement term(const PhiGenerator& g, AlgebraElement coeff) {
        ResolutionElement r(coeff.n());
        r.add(g, std::move(coeff));
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PhiGenerator, AlgebraElement>& terms() const { return terms_; }

    int degree() const {
        if (terms_.empty()) throw ZeroElementError("degree of the zero element");
        return terms_.begin()->first.degree();
    }

    void add(const PhiGenerator& g, const AlgebraElement& coeff) {
        if (coeff.is_zero()) return;
        if (static_cast<int>(g.a.size()) != n_ || coeff.n() != n_)
            throw IndexError("generator length does not match");
        if (!terms_.empty() && g.degree() != terms_.begin()->first.degree())
            throw MixedDegreeError("mixing homological degrees " +
                                   std::to_string(g.degree()) + " and " +
                                   std::to_string(terms_.begin()->first.degree()));
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ResolutionElement& operator+=(const ResolutionElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }

    ResolutionElement& operator-=(const ResolutionElement& o) {
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }

    friend ResolutionElement operator+(ResolutionElement a, const ResolutionElement& b) {
        a += b;
        return a;
    }

    friend ResolutionElement operator-(ResolutionElement a, const ResolutionElement& b) {
        a -= b;
        return a;
    }

    ResolutionElement scaled(const LaurentScalar& s) const {
        ResolutionElement r(n_);
        if (s.is_zero()) return r;
        for (const auto& [g, c] : terms_) r.add(g, c.scaled(s));
        return r;
    }

    // Left S-action: f * (c Phi) = (f c) Phi.
    ResolutionElement left_multiplied(const AlgebraElement& f, const Presentation& pres) const {
        ResolutionElement r(n_);
        for (const auto& [g, c] : terms_) r.add(g, multiply(f, c, pres, AlgebraMode::S));
        return r;
    }

    friend bool operator==(const ResolutionElement& a, const ResolutionElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    int n_ = 0;
    std::map<PhiGenerator, AlgebraElement> terms_;
};

inline std::string resolution_element_str(const ResolutionElement& e,
                                          const Presentation& pres) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        out += "[" + element_str(c, pres) + "]*" + g.str();
    }
    return out;
}

// sigma_i(a): alternates 1, N_i - 1 for nilpotent indices; constantly 1 after.
inline long sigma(int i, long a, const Presentation& pres) {
    if (i < 1 || i > pres.n) throw IndexError("sigma index out of range");
    if (i > pres.t) return 1;
    return (a % 2 != 0) ? 1 : pres.N[i - 1] - 1;
}

// tau_i(a) = sum_{j=1}^{a} sigma_i(j); closed form kN_i / kN_i + 1.
inline long tau(int i, long a, const Presentation& pres) {
    if (i < 1 || i > pres.n) throw IndexError("tau index out of range");
    if (a < 0) throw IndexError("tau argument must be nonnegative");
    if (i > pres.t) return a;
    long k = a / 2;
    return (a % 2 == 0) ? k * pres.N[i - 1] : k * pres.N[i - 1] + 1;
}

// All generators of homological degree m, descending lexicographically.
inline std::vector<PhiGenerator> generators_in_degree(int m, const Presentation& pres) {
    std::vector<PhiGenerator> out;
    PhiGenerator g{std::vector<int>(pres.n, 0)};
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == pres.n) {
            if (remaining == 0) out.push_back(g);
            return;
        }
        int hi = (idx < pres.t) ? remaining : std::min(remaining, 1);
        for (int k = hi; k >= 0; --k) {
            g.a[idx] = k;
            self(self, idx + 1, remaining - k);
        }
        g.a[idx] = 0;
    };
    if (m >= 0) rec(rec, 0, m);
    return out;
}

// d_i(Phi(a)) = prod_{i<l} (-1)^{a_l} q_li^{sigma_i(a_i) tau_l(a_l)}
//               x_i^{sigma_i(a_i)} Phi(..., a_i - 1, ...), zero when a_i = 0.
inline ResolutionElement differential_component(int i, const PhiGenerator& g,
                                                const Presentation& pres,
                                                Defect defect = Defect::none) {
    ResolutionElement out(pres.n);
    if (i < 1 || i > pres.n) throw IndexError("differential index out of range");
    if (g.a[i - 1] == 0) return out;

    long sig = sigma(i, g.a[i - 1], pres);
    long sig_used = sig + (defect == Defect::d_scalar_exponent ? 1 : 0);
    LaurentScalar scal(1);
    for (int l = i + 1; l <= pres.n; ++l) {
        long al = g.a[l - 1];
        if (al % 2 != 0) scal = -scal;
        long expo = sig_used * tau(l, al, pres);
        if (expo != 0) scal *= pres.q(l, i).pow(expo);
    }

    PhiGenerator lower = g;
    lower.a[i - 1] -= 1;
    out.add(lower, AlgebraElement::monomial_term(
                       Monomial::power(pres.n, i, static_cast<int>(sig)), scal));
    return out;
}

inline ResolutionElement differential_component(int i, const ResolutionElement& e,
                                                const Presentation& pres,
                                                Defect defect = Defect::none) {
    ResolutionElement out(pres.n);
    for (const auto& [g, f] : e.terms())
        out += differential_component(i, g, pres, defect).left_multiplied(f, pres);
    return out;
}

inline ResolutionElement differential_generator(const PhiGenerator& g,
                                                const Presentation& pres,
                                                Defect defect = Defect::none) {
    ResolutionElement out(pres.n);
    for (int i = 1; i <= pres.n; ++i) out += differential_component(i, g, pres, defect);
    return out;
}

inline ResolutionElement differential(const ResolutionElement& e, const Presentation& pres,
                                      Defect defect = Defect::none) {
    ResolutionElement out(pres.n);
    for (const auto& [g, f] : e.terms())
        out += differential_generator(g, pres, defect).left_multiplied(f, pres);
    return out;
}

// s_l on a basis element x^J Phi(a). The monomial factors as
// x^J = c * eta * x_l^{J_l} with eta omitting x_l; the case split follows the
// parity of a_l, with scalar prod_{l<m} (-1)^{a_m} q_ml^{-sigma_l(a_l+1) tau_m(a_m)}
// for l <= t and omega = 1 / prod_{l<u} (-1)^{a_u} q_ul^{a_u} beyond.
inline ResolutionElement homotopy_component(int l, const Monomial& J,
                                            const PhiGenerator& g,
                                            const Presentation& pres) {
    ResolutionElement out(pres.n);
    const int j = J.e[l - 1];

    LaurentScalar carry(1);
    for (int m = l + 1; m <= pres.n; ++m) {
        long expo = static_cast<long>(j) * J.e[m - 1];
        if (expo != 0) carry *= pres.q(l, m).pow(expo);
    }
    Monomial eta = J;
    eta.e[l - 1] = 0;
    const AlgebraElement eta_elem = AlgebraElement::monomial_term(eta, LaurentScalar(1));

    if (l <= pres.t) {
        const bool a_even = g.a[l - 1] % 2 == 0;
        long sig_up = sigma(l, g.a[l - 1] + 1, pres);
        LaurentScalar kappa(1);
        for (int m = l + 1; m <= pres.n; ++m) {
            long am = g.a[m - 1];
            if (am % 2 != 0) kappa = -kappa;
            long expo = -sig_up * tau(m, am, pres);
            if (expo != 0) kappa *= pres.q(m, l).pow(expo);
        }
        PhiGenerator up = g;
        up.a[l - 1] += 1;
        if (a_even) {
            if (j == 0) return out;
            AlgebraElement coeff = multiply(
                eta_elem, Monomial::power(pres.n, l, j - 1), pres, AlgebraMode::S);
            out.add(up, coeff.scaled(carry * kappa));
        } else {
            if (j != pres.N[l - 1] - 1) return out;
            out.add(up, eta_elem.scaled(carry * kappa));
        }
        return out;
    }

    // l > t: x_l^{j-1} contributes zero when j = 0, and Phi entries beyond
    // the nilpotent block cannot exceed 1.
    if (j == 0 || g.a[l - 1] != 0) return out;
    LaurentScalar denom(1);
    for (int u = l + 1; u <= pres.n; ++u) {
        long au = g.a[u - 1];
        if (au % 2 != 0) denom = -denom;
        if (au != 0) denom *= pres.q(u, l).pow(au);
    }
    PhiGenerator up = g;
    up.a[l - 1] = 1;
    AlgebraElement coeff =
        multiply(eta_elem, Monomial::power(pres.n, l, j - 1), pres, AlgebraMode::S);
    out.add(up, coeff.scaled(carry * denom.inverse()));
    return out;
}

// s(x^J Phi(a)) = (s_1 + ... + s_n) / (n - C), where C counts indices with
// both exponent and generator entry zero; zero when C = n.
inline ResolutionElement homotopy_basis(const Monomial& J, const PhiGenerator& g,
                                        const Presentation& pres) {
    for (int i = 0; i < pres.t; ++i)
        if (J.e[i] >= pres.N[i])
            throw NotReducedError("homotopy input is not an S-basis monomial: " + J.str());
    int C = 0;
    for (int i = 0; i < pres.n; ++i)
        if (J.e[i] == 0 && g.a[i] == 0) ++C;
    ResolutionElement out(pres.n);
    if (C == pres.n) return out;
    for (int l = 1; l <= pres.n; ++l) out += homotopy_component(l, J, g, pres);
    return out.scaled(LaurentScalar(rational(1, pres.n - C)));
}

inline ResolutionElement homotopy_component(int l, const ResolutionElement& e,
                                            const Presentation& pres) {
    ResolutionElement out(pres.n);
    for (const auto& [g, f] : e.terms())
        for (const auto& [m, c] : f.terms())
            out += homotopy_component(l, m, g, pres).scaled(c);
    return out;
}

// k-linear extension of s over basis elements.
inline ResolutionElement homotopy(const ResolutionElement& e, const Presentation& pres) {
    ResolutionElement out(pres.n);
    for (const auto& [g, f] : e.terms())
        for (const auto& [m, c] : f.terms()) out += homotopy_basis(m, g, pres).scaled(c);
    return out;
}

inline int default_exp_bound(const Presentation& pres) {
    return std::max(pres.max_nilpotency(), 4);
}

// d^2 = 0 plus the pairwise anticommutators on every generator in range.
inline Report verify_complex(const Presentation& pres, int max_degree,
                             Defect defect = Defect::none) {
    Report report("complex max_degree=" + std::to_string(max_degree));
    for (int m = 2; m <= max_degree; ++m) {
        for (const PhiGenerator& g : generators_in_degree(m, pres)) {
            ResolutionElement dd =
                differential(differential_generator(g, pres, defect), pres, defect);
            if (dd.is_zero())
                report.ok("d^2 " + g.str());
            else
                report.fail("d^2 " + g.str(), resolution_element_str(dd, pres));

            bool pair_ok = true;
            std::string witness;
            for (int i = 1; i <= pres.n && pair_ok; ++i)
                for (int j = i; j <= pres.n && pair_ok; ++j) {
                    ResolutionElement anti =
                        differential_component(
                            i, differential_component(j, g, pres, defect), pres, defect) +
                        differential_component(
                            j, differential_component(i, g, pres, defect), pres, defect);
                    if (i == j) anti = anti.scaled(LaurentScalar(rational(1, 2)));
                    if (!anti.is_zero()) {
                        pair_ok = false;
                        witness = "d_" + std::to_string(i) + "d_" + std::to_string(j) +
                                  "+d_" + std::to_string(j) + "d_" + std::to_string(i) +
                                  " = " + resolution_element_str(anti, pres);
                    }
                }
            if (pair_ok)
                report.ok("anticommutators " + g.str());
            else
                report.fail("anticommutators " + g.str(), witness);
        }
    }
    return report;
}

// sd + ds = id on bounded basis elements of positive degree, with the
// single-index identity and the mixed-index vanishing spot-checked in low
// degrees.
inline Report verify_homotopy(const Presentation& pres, int max_degree, int exp_bound) {
    Report report("homotopy max_degree=" + std::to_string(max_degree) +
                  " exp_bound=" + std::to_string(exp_bound));
    const std::vector<Monomial> monomials = bounded_basis_monomials(pres, exp_bound);
    for (int m = 1; m <= max_degree; ++m) {
        for (const PhiGenerator& g : generators_in_degree(m, pres)) {
            for (const Monomial& J : monomials) {
                ResolutionElement elem = ResolutionElement::term(
                    g, AlgebraElement::monomial_term(J, LaurentScalar(1)));
                ResolutionElement result =
                    homotopy(differential(elem, pres), pres) +
                    differential(homotopy(elem, pres), pres);
                const std::string obj = J.str() + "*" + g.str();
                if (result == elem)
                    report.ok("sd+ds " + obj);
                else
                    report.fail("sd+ds " + obj,
                                resolution_element_str(result - elem, pres));

                if (m > 2) continue;  // spot checks in low degrees
                for (int i = 1; i <= pres.n; ++i) {
                    ResolutionElement same =
                        homotopy_component(i, differential_component(i, elem, pres), pres) +
                        differential_component(i, homotopy_component(i, elem, pres), pres);
                    bool expect_id = J.e[i - 1] > 0 || g.a[i - 1] > 0;
                    ResolutionElement expected =
                        expect_id ? elem : ResolutionElement::zero(pres.n);
                    if (!(same == expected))
                        report.fail("s_i d_i + d_i s_i i=" + std::to_string(i) + " " + obj,
                                    resolution_element_str(same - expected, pres));
                    for (int l = 1; l <= pres.n; ++l) {
                        if (l == i) continue;
                        ResolutionElement mixed =
                            homotopy_component(l, differential_component(i, elem, pres),
                                               pres) +
                            differential_component(i, homotopy_component(l, elem, pres),
                                                   pres);
                        if (!mixed.is_zero())
                            report.fail("s_l d_i + d_i s_l (i=" + std::to_string(i) +
                                            ",l=" + std::to_string(l) + ") " + obj,
                                        resolution_element_str(mixed, pres));
                    }
                }
            }
        }
    }
    return report;
}

// Every nonzero bounded basis monomial of S is a unit multiple of the image
// of the canonical preimage x^{J - e_i} Phi(e_i), i minimal with J_i > 0.
inline Report verify_exactness_at_zero(const Presentation& pres, int exp_bound) {
    Report report("exactness-at-zero exp_bound=" + std::to_string(exp_bound));
    for (int i = 1; i <= pres.n; ++i) {
        PhiGenerator e_i{std::vector<int>(pres.n, 0)};
        e_i.a[i - 1] = 1;
        ResolutionElement image = differential_generator(e_i, pres);
        LaurentScalar eps(0);
        for (const auto& [g, c] : image.terms()) eps += c.augmentation();
        if (eps.is_zero())
            report.ok("eps(d " + e_i.str() + ")");
        else
            report.fail("eps(d " + e_i.str() + ")", eps.str());
    }

    for (const Monomial& J : bounded_basis_monomials(pres, exp_bound)) {
        if (J.is_identity()) continue;
        int i = 1;
        while (J.e[i - 1] == 0) ++i;
        Monomial lowered = J;
        lowered.e[i - 1] -= 1;
        PhiGenerator e_i{std::vector<int>(pres.n, 0)};
        e_i.a[i - 1] = 1;
        ResolutionElement image = differential(
            ResolutionElement::term(
                e_i, AlgebraElement::monomial_term(lowered, LaurentScalar(1))),
            pres);

        const std::string obj = "preimage of " + J.str();
        bool good = false;
        if (image.terms().size() == 1) {
            const auto& [g, coeff] = *image.terms().begin();
            if (g.degree() == 0 && coeff.term_count() == 1) {
                const auto& [m, c] = *coeff.terms().begin();
                good = (m == J) && c.is_unit();
            }
        }
        if (good)
            report.ok(obj);
        else
            report.fail(obj, resolution_element_str(image, pres));
    }
    return report;
}

}  // namespace qkoszul
