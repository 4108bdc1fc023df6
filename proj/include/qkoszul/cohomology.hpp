#pragma once

#include <string>
#include <vector>

#include "resolution.hpp"

namespace qkoszul {

// xi_i(Phi(a)) = prod_{l<i} q_il^{N_i tau_l(a_l)} Phi(..., a_i - 2, ...),
// zero when a_i < 2. Defined for nilpotent indices only.
inline ResolutionElement xi_apply(int i, const PhiGenerator& g, const Presentation& pres,
                                  Defect defect = Defect::none) {
    if (i < 1 || i > pres.t)
        throw IndexError("xi index beyond the nilpotent block");
    ResolutionElement out(pres.n);
    if (g.a[i - 1] < 2) return out;

    long n_used = pres.N[i - 1] + (defect == Defect::xi_scalar_exponent ? 1 : 0);
    LaurentScalar scal(1);
    for (int l = 1; l < i; ++l) {
        long expo = n_used * tau(l, g.a[l - 1], pres);
        if (expo != 0) scal *= pres.q(i, l).pow(expo);
    }
    PhiGenerator lower = g;
    lower.a[i - 1] -= 2;
    out.add(lower, AlgebraElement::monomial_term(Monomial::identity(pres.n), scal));
    return out;
}

// eta_i(Phi(a)) = prod_{i<l} q_li^{(sigma_i(a_i)-1) tau_l(a_l)}
//                 prod_{l<i} (-1)^{a_l} q_il^{tau_l(a_l)}
//                 x_i^{sigma_i(a_i)-1} Phi(..., a_i - 1, ...), zero when a_i = 0.
inline ResolutionElement eta_apply(int i, const PhiGenerator& g, const Presentation& pres) {
    if (i < 1 || i > pres.n) throw IndexError("eta index out of range");
    ResolutionElement out(pres.n);
    if (g.a[i - 1] == 0) return out;

    long sig = sigma(i, g.a[i - 1], pres);
    LaurentScalar scal(1);
    for (int l = i + 1; l <= pres.n; ++l) {
        long expo = (sig - 1) * tau(l, g.a[l - 1], pres);
        if (expo != 0) scal *= pres.q(l, i).pow(expo);
    }
    for (int l = 1; l < i; ++l) {
        if (g.a[l - 1] % 2 != 0) scal = -scal;
        long expo = tau(l, g.a[l - 1], pres);
        if (expo != 0) scal *= pres.q(i, l).pow(expo);
    }
    PhiGenerator lower = g;
    lower.a[i - 1] -= 1;
    out.add(lower, AlgebraElement::monomial_term(
                       Monomial::power(pres.n, i, static_cast<int>(sig - 1)), scal));
    return out;
}

struct ChainAtom {
    enum class Kind { xi, eta };
    Kind kind;
    int index;

    int shift() const { return kind == Kind::xi ? 2 : 1; }

    std::string str() const {
        return (kind == Kind::xi ? "xi" : "eta") + std::to_string(index);
    }
};

// Composition of xi/eta chain maps, applied right-to-left.
struct ChainMap {
    std::vector<ChainAtom> atoms;

    int shift() const {
        int s = 0;
        for (const ChainAtom& a : atoms) s += a.shift();
        return s;
    }

    std::string str() const {
        if (atoms.empty()) return "id";
        std::string out;
        for (const ChainAtom& a : atoms) out += (out.empty() ? "" : "*") + a.str();
        return out;
    }
};

inline ChainMap compose(const std::vector<ChainMap>& maps) {
    ChainMap out;
    for (const ChainMap& m : maps)
        out.atoms.insert(out.atoms.end(), m.atoms.begin(), m.atoms.end());
    return out;
}

inline ChainMap xi_map(int i) { return ChainMap{{{ChainAtom::Kind::xi, i}}}; }
inline ChainMap eta_map(int i) { return ChainMap{{{ChainAtom::Kind::eta, i}}}; }

inline ResolutionElement apply_atom(const ChainAtom& atom, const ResolutionElement& e,
                                    const Presentation& pres,
                                    Defect defect = Defect::none) {
    ResolutionElement out(pres.n);
    for (const auto& [g, f] : e.terms()) {
        ResolutionElement image = (atom.kind == ChainAtom::Kind::xi)
                                      ? xi_apply(atom.index, g, pres, defect)
                                      : eta_apply(atom.index, g, pres);
        out += image.left_multiplied(f, pres);
    }
    return out;
}

inline ResolutionElement apply_chain_map(const ChainMap& m, const ResolutionElement& e,
                                         const Presentation& pres,
                                         Defect defect = Defect::none) {
    ResolutionElement cur = e;
    for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it) {
        if (cur.is_zero()) return cur;
        cur = apply_atom(*it, cur, pres, defect);
    }
    return cur;
}

inline ResolutionElement apply_chain_map(const ChainMap& m, const PhiGenerator& g,
                                         const Presentation& pres,
                                         Defect defect = Defect::none) {
    return apply_chain_map(
        m, ResolutionElement::term(g, AlgebraElement::one(pres.n)), pres, defect);
}

// Strict commutation d(m(Phi)) = m(d(Phi)) on all generators in range.
inline Report verify_chain_map(const ChainMap& m, const Presentation& pres,
                               int max_degree, Defect defect = Defect::none) {
    Report report("chain-map " + m.str());
    for (int deg = 1; deg <= max_degree; ++deg) {
        for (const PhiGenerator& g : generators_in_degree(deg, pres)) {
            ResolutionElement lhs =
                differential(apply_chain_map(m, g, pres, defect), pres);
            ResolutionElement rhs = apply_chain_map(
                m, differential_generator(g, pres), pres, defect);
            if (lhs == rhs)
                report.ok(m.str() + " on " + g.str());
            else
                report.fail(m.str() + " on " + g.str(),
                            resolution_element_str(lhs - rhs, pres));
        }
    }
    return report;
}

// The three relation families, as chain-map identities on generators:
// xi_i xi_j = q_ji^{N_i N_j} xi_j xi_i, eta_i xi_j = q_ji^{N_j} xi_j eta_i,
// eta_i eta_j = -q_ji eta_j eta_i.
inline Report verify_relations(const Presentation& pres, int max_degree) {
    Report report("relations max_degree=" + std::to_string(max_degree));
    auto check_identity = [&](const std::string& name, const ChainMap& left,
                              const ChainMap& right, const LaurentScalar& factor) {
        for (int deg = 1; deg <= max_degree; ++deg)
            for (const PhiGenerator& g : generators_in_degree(deg, pres)) {
                ResolutionElement lhs = apply_chain_map(left, g, pres);
                ResolutionElement rhs =
                    apply_chain_map(right, g, pres).scaled(factor);
                if (!(lhs == rhs)) {
                    report.fail(name, "witness " + g.str() + ": " +
                                          resolution_element_str(lhs - rhs, pres));
                    return;
                }
            }
        report.ok(name);
    };

    for (int i = 1; i <= pres.t; ++i)
        for (int j = i + 1; j <= pres.t; ++j)
            check_identity(
                "xi" + std::to_string(i) + "*xi" + std::to_string(j),
                compose({xi_map(i), xi_map(j)}), compose({xi_map(j), xi_map(i)}),
                pres.q(j, i).pow(static_cast<long>(pres.N[i - 1]) * pres.N[j - 1]));

    for (int i = 1; i <= pres.n; ++i)
        for (int j = 1; j <= pres.t; ++j)
            check_identity("eta" + std::to_string(i) + "*xi" + std::to_string(j),
                           compose({eta_map(i), xi_map(j)}),
                           compose({xi_map(j), eta_map(i)}),
                           pres.q(j, i).pow(pres.N[j - 1]));

    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j)
            check_identity("eta" + std::to_string(i) + "*eta" + std::to_string(j),
                           compose({eta_map(i), eta_map(j)}),
                           compose({eta_map(j), eta_map(i)}), -pres.q(j, i));
    return report;
}

// Monomial xi_1^{b_1}...xi_t^{b_t} eta_1^{c_1}...eta_n^{c_n} with a scalar.
struct CohomologyMonomial {
    std::vector<int> b;  // t entries, >= 0
    std::vector<int> c;  // n entries, in {0, 1}
    LaurentScalar coeff = LaurentScalar(1);

    int degree() const {
        int d = 0;
        for (int k : b) d += 2 * k;
        for (int k : c) d += k;
        return d;
    }

    bool is_zero() const { return coeff.is_zero(); }

    ChainMap chain_map() const {
        ChainMap m;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (int k = 0; k < b[i]; ++k)
                m.atoms.push_back({ChainAtom::Kind::xi, static_cast<int>(i) + 1});
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) m.atoms.push_back({ChainAtom::Kind::eta, static_cast<int>(i) + 1});
        return m;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "xi" + std::to_string(i + 1);
            if (b[i] > 1) out += "^" + std::to_string(b[i]);
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            if (!out.empty()) out += "*";
            out += "eta" + std::to_string(i + 1);
        }
        return out.empty() ? "1" : out;
    }
};

// The bijection a = 2b + c between generators and cohomology monomials.
inline CohomologyMonomial monomial_for_generator(const PhiGenerator& g,
                                                 const Presentation& pres) {
    CohomologyMonomial m;
    m.b.assign(pres.t, 0);
    m.c.assign(pres.n, 0);
    for (int i = 0; i < pres.n; ++i) {
        if (i < pres.t) {
            m.b[i] = g.a[i] / 2;
            m.c[i] = g.a[i] % 2;
        } else {
            m.c[i] = g.a[i];
        }
    }
    return m;
}

inline PhiGenerator generator_for_monomial(const CohomologyMonomial& m,
                                           const Presentation& pres) {
    PhiGenerator g{std::vector<int>(pres.n, 0)};
    for (int i = 0; i < pres.n; ++i)
        g.a[i] = (i < pres.t ? 2 * m.b[i] : 0) + m.c[i];
    return g;
}

inline std::vector<CohomologyMonomial> cohomology_basis_in_degree(
    int degree, const Presentation& pres) {
    std::vector<CohomologyMonomial> out;
    for (const PhiGenerator& g : generators_in_degree(degree, pres))
        out.push_back(monomial_for_generator(g, pres));
    return out;
}

// Applies the composed chain map and evaluates the result at 1*Phi(0).
inline LaurentScalar dual_pairing(const CohomologyMonomial& mono, const PhiGenerator& g,
                                  const Presentation& pres) {
    if (mono.degree() != g.degree())
        throw DegreeMismatchError("pairing degree " + std::to_string(mono.degree()) +
                                  " against " + std::to_string(g.degree()));
    ResolutionElement image = apply_chain_map(mono.chain_map(), g, pres);
    LaurentScalar value(0);
    for (const auto& [h, coeff] : image.terms()) value += coeff.augmentation();
    return value * mono.coeff;
}

// Pairing matrix per degree: diagonal with unit entries under a = 2b + c.
inline Report verify_dual_basis(const Presentation& pres, int max_degree) {
    Report report("dual-basis max_degree=" + std::to_string(max_degree));
    for (int m = 0; m <= max_degree; ++m) {
        const auto gens = generators_in_degree(m, pres);
        const auto monos = cohomology_basis_in_degree(m, pres);
        const std::string obj = "degree " + std::to_string(m);
        if (gens.size() != monos.size()) {
            report.fail(obj, "count mismatch");
            continue;
        }
        bool good = true;
        std::string witness;
        for (std::size_t r = 0; r < monos.size() && good; ++r)
            for (std::size_t c = 0; c < gens.size() && good; ++c) {
                LaurentScalar v = dual_pairing(monos[r], gens[c], pres);
                bool want_unit = (r == c);
                if ((want_unit && !v.is_unit()) || (!want_unit && !v.is_zero())) {
                    good = false;
                    witness = monos[r].str() + " against " + gens[c].str() + " = " +
                              v.str();
                }
            }
        if (good)
            report.ok(obj + " (" + std::to_string(gens.size()) + "x" +
                      std::to_string(gens.size()) + " diagonal)");
        else
            report.fail(obj, witness);
    }
    return report;
}

// eta_i^2 dual-evaluates to a unit multiple of xi_i's dual class when
// N_i = 2 and to zero otherwise.
inline Report verify_eta_square(const Presentation& pres) {
    Report report("eta-square");
    for (int i = 1; i <= pres.n; ++i) {
        ChainMap sq = compose({eta_map(i), eta_map(i)});
        bool expect_xi = (i <= pres.t) && pres.N[i - 1] == 2;
        bool good = true;
        std::string witness;
        for (const PhiGenerator& g : generators_in_degree(2, pres)) {
            ResolutionElement image = apply_chain_map(sq, g, pres);
            LaurentScalar v(0);
            for (const auto& [h, coeff] : image.terms()) v += coeff.augmentation();
            bool diag = expect_xi && g.a[i - 1] == 2;
            if ((diag && !v.is_unit()) || (!diag && !v.is_zero())) {
                good = false;
                witness = "eta" + std::to_string(i) + "^2 at " + g.str() + " = " +
                          v.str();
                break;
            }
        }
        const std::string obj = "eta" + std::to_string(i) + "^2 ~ " +
                                (expect_xi ? "xi" + std::to_string(i) : "0");
        if (good)
            report.ok(obj);
        else
            report.fail(obj, witness);
    }
    return report;
}

// Normalizes a product of two monomials to the canonical order
// xi_1...xi_t eta_1...eta_n, accumulating the exact scalar from the
// relations; eta_i^2 becomes xi_i when N_i = 2 and kills the class otherwise.
inline CohomologyMonomial multiply_classes(const CohomologyMonomial& x,
                                           const CohomologyMonomial& y,
                                           const Presentation& pres) {
    std::vector<ChainAtom> seq = x.chain_map().atoms;
    {
        auto rhs = y.chain_map().atoms;
        seq.insert(seq.end(), rhs.begin(), rhs.end());
    }
    LaurentScalar coeff = x.coeff * y.coeff;

    CohomologyMonomial zero;
    zero.b.assign(pres.t, 0);
    zero.c.assign(pres.n, 0);
    zero.coeff = LaurentScalar(0);
    if (coeff.is_zero()) return zero;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            ChainAtom& a = seq[k];
            ChainAtom& b = seq[k + 1];
            using Kind = ChainAtom::Kind;
            if (a.kind == Kind::eta && b.kind == Kind::xi) {
                // eta_i xi_j = q_ji^{N_j} xi_j eta_i
                coeff *= pres.q(b.index, a.index).pow(pres.N[b.index - 1]);
                std::swap(a, b);
                changed = true;
            } else if (a.kind == Kind::xi && b.kind == Kind::xi &&
                       a.index > b.index) {
                // xi_i xi_j = q_ji^{N_i N_j} xi_j xi_i with i > j
                coeff *= pres.q(b.index, a.index)
                             .pow(static_cast<long>(pres.N[a.index - 1]) *
                                  pres.N[b.index - 1]);
                std::swap(a, b);
                changed = true;
            } else if (a.kind == Kind::eta && b.kind == Kind::eta &&
                       a.index > b.index) {
                // eta_i eta_j = -q_ji eta_j eta_i with i > j
                coeff *= -pres.q(b.index, a.index);
                std::swap(a, b);
                changed = true;
            } else if (a.kind == Kind::eta && b.kind == Kind::eta &&
                       a.index == b.index) {
                if (a.index <= pres.t && pres.N[a.index - 1] == 2) {
                    a = ChainAtom{Kind::xi, a.index};
                    seq.erase(seq.begin() + k + 1);
                } else {
                    return zero;
                }
                changed = true;
            }
            if (changed) break;
        }
    }

    CohomologyMonomial out;
    out.b.assign(pres.t, 0);
    out.c.assign(pres.n, 0);
    out.coeff = coeff;
    for (const ChainAtom& a : seq) {
        if (a.kind == ChainAtom::Kind::xi)
            ++out.b[a.index - 1];
        else
            ++out.c[a.index - 1];
    }
    return out;
}

// dim H^m by direct enumeration of (b, c) patterns with 2|b| + |c| = m;
// equals the z^m coefficient of (1+z)^n / (1-z^2)^t.
inline std::vector<long> hilbert_coefficients(const Presentation& pres, int max_degree) {
    std::vector<long> dims(max_degree + 1, 0);
    std::vector<int> c(pres.n, 0);
    auto count_b = [&](int budget) {
        // number of b in N^t with 2 sum(b) <= budget, by remaining degree
        std::vector<long> per_degree((budget / 2) + 1, 0);
        std::vector<int> b(pres.t, 0);
        auto rec = [&](auto&& self, int idx, int sum) -> void {
            if (idx == pres.t) {
                ++per_degree[sum];
                return;
            }
            for (int k = 0; sum + k <= budget / 2; ++k) {
                b[idx] = k;
                self(self, idx + 1, sum + k);
            }
            b[idx] = 0;
        };
        rec(rec, 0, 0);
        return per_degree;
    };

    auto rec_c = [&](auto&& self, int idx, int csum) -> void {
        if (idx == pres.n) {
            if (csum > max_degree) return;
            auto per_degree = count_b(max_degree - csum);
            for (std::size_t s = 0; s < per_degree.size(); ++s) {
                int total = csum + 2 * static_cast<int>(s);
                if (total <= max_degree) dims[total] += per_degree[s];
            }
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            c[idx] = v;
            self(self, idx + 1, csum + v);
        }
        c[idx] = 0;
    };
    rec_c(rec_c, 0, 0);
    return dims;
}

}  // namespace qkoszul
