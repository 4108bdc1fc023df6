#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"

namespace qkoszul {

// Names the formal parameter q_ij. Stored with i < j; q_ji and q_ii are
// expressed through inversion and the constant 1 rather than stored.
struct ParamIndex {
    int i = 0;
    int j = 0;
    auto operator<=>(const ParamIndex&) const = default;

    std::string str() const {
        return "q" + std::to_string(i) + "_" + std::to_string(j);
    }
};

inline ParamIndex param_index(int i, int j) {
    if (i < 1 || i >= j) throw IndexError("parameters require 1 <= i < j");
    return ParamIndex{i, j};
}

// Exponent map of one q-monomial; never stores zero exponents.
using QExponents = std::map<ParamIndex, int>;

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Element of the Laurent ring QQ[q_ij^{+-1}]. Canonical form: a map from
// exponent patterns to nonzero rational coefficients; zero is the empty map.
class LaurentScalar {
  public:
    LaurentScalar() = default;

    LaurentScalar(const Rational& c) {  // NOLINT: implicit by design
        if (c != 0) terms_[QExponents{}] = c;
    }
    LaurentScalar(long c) : LaurentScalar(Rational(c)) {}
    LaurentScalar(int c) : LaurentScalar(Rational(c)) {}

    static LaurentScalar parameter(int i, int j) {
        return monomial(QExponents{{param_index(i, j), 1}}, 1);
    }

    static LaurentScalar monomial(QExponents exps, const Rational& c) {
        LaurentScalar r;
        if (c == 0) return r;
        for (auto it = exps.begin(); it != exps.end();) {
            if (it->second == 0)
                it = exps.erase(it);
            else
                ++it;
        }
        r.terms_[std::move(exps)] = c;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.empty() &&
               terms_.begin()->second == 1;
    }

    // A unit of the Laurent ring: a single term with nonzero coefficient.
    bool is_unit() const { return terms_.size() == 1; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("scalar is not constant");
        return terms_.begin()->second;
    }

    std::size_t term_count() const { return terms_.size(); }

    const std::map<QExponents, Rational>& terms() const { return terms_; }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for (const auto& [exps, c] : o.terms_) add_term(exps, c);
        return *this;
    }

    LaurentScalar& operator-=(const LaurentScalar& o) {
        for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
        return *this;
    }

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
        a += b;
        return a;
    }

    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
        a -= b;
        return a;
    }

    LaurentScalar operator-() const {
        LaurentScalar r;
        for (const auto& [exps, c] : terms_) r.terms_[exps] = -c;
        return r;
    }

    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                QExponents e = ea;
                for (const auto& [p, k] : eb) {
                    int& slot = e[p];
                    slot += k;
                    if (slot == 0) e.erase(p);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentScalar& operator*=(const LaurentScalar& o) {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.terms_ == b.terms_;
    }

    // Multiplicative inverse; defined only for units (single q-monomials).
    LaurentScalar inverse() const {
        if (terms_.size() != 1)
            throw NotAUnitError("not a unit: " + str());
        const auto& [exps, c] = *terms_.begin();
        QExponents inv;
        for (const auto& [p, k] : exps) inv[p] = -k;
        return monomial(std::move(inv), Rational(1) / c);
    }

    LaurentScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        LaurentScalar r(1);
        LaurentScalar base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rational eval(const std::map<ParamIndex, Rational>& assignment) const {
        for (const auto& [p, v] : assignment)
            if (v == 0)
                throw ZeroParameterValueError("parameter " + p.str() + " assigned 0");
        Rational total(0);
        for (const auto& [exps, c] : terms_) {
            Rational term = c;
            for (const auto& [p, k] : exps) {
                auto it = assignment.find(p);
                if (it == assignment.end())
                    throw MissingParameterError("no value for parameter " + p.str());
                Rational v = it->second;
                if (k < 0) v = Rational(1) / v;
                for (int m = 0; m < (k < 0 ? -k : k); ++m) term *= v;
            }
            total += term;
        }
        return total;
    }

    LaurentScalar substitute(const std::map<ParamIndex, Rational>& assignment) const {
        return LaurentScalar(eval(assignment));
    }

    std::set<ParamIndex> parameters() const {
        std::set<ParamIndex> ps;
        for (const auto& [exps, c] : terms_)
            for (const auto& [p, k] : exps) ps.insert(p);
        return ps;
    }

    // Canonical printing: terms sorted by exponent map, parameters by (i, j).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [exps, c] : terms_) {
            std::string body = term_str(exps, abs(c));
            if (first) {
                out = (c < 0 ? "-" : "") + body;
                first = false;
            } else {
                out += (c < 0 ? " - " : " + ") + body;
            }
        }
        return out;
    }

    // Renders magnitude * q-factors * tail, omitting a magnitude of 1 when
    // other factors are present. Shared by scalar and element printing.
    static std::string render_product(const QExponents& exps, const Rational& magnitude,
                                      const std::string& tail) {
        std::string out;
        if ((exps.empty() && tail.empty()) || magnitude != 1) out = magnitude.get_str();
        for (const auto& [p, k] : exps) {
            if (!out.empty()) out += "*";
            out += p.str();
            if (k != 1) out += "^" + std::to_string(k);
        }
        if (!tail.empty()) {
            if (!out.empty()) out += "*";
            out += tail;
        }
        return out;
    }

  private:
    void add_term(const QExponents& exps, const Rational& c) {
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static std::string term_str(const QExponents& exps, const Rational& mag) {
        return render_product(exps, mag, "");
    }

    std::map<QExponents, Rational> terms_;
};

// The scalar q_ij of a quantum symmetric presentation, as a formal parameter:
// the stored parameter when i < j, its inverse when i > j, and 1 when i = j.
inline LaurentScalar canonical_q(int i, int j) {
    if (i < 1 || j < 1) throw IndexError("generator indices start at 1");
    if (i == j) return LaurentScalar(1);
    if (i < j) return LaurentScalar::parameter(i, j);
    return LaurentScalar::parameter(j, i).inverse();
}

inline LaurentScalar canonical_q(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexError("generator index out of range 1.." + std::to_string(n));
    return canonical_q(i, j);
}

}  // namespace qkoszul
