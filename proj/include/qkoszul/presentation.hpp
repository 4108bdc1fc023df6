#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace qkoszul {

// Sorted monomial x_1^{e_1} ... x_n^{e_n}. The default ordering is a plain
// storage order; admissible comparisons go through compare_monomials.
struct Monomial {
    std::vector<int> e;

    auto operator<=>(const Monomial&) const = default;

    static Monomial identity(int n) { return Monomial{std::vector<int>(n, 0)}; }

    static Monomial power(int n, int i, int k) {
        Monomial m = identity(n);
        if (i < 1 || i > n) throw IndexError("generator index out of range");
        m.e[i - 1] = k;
        return m;
    }

    static Monomial generator(int n, int i) { return power(n, i, 1); }

    int total_degree() const {
        int d = 0;
        for (int k : e) d += k;
        return d;
    }

    bool is_identity() const {
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(i + 1);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
        return out.empty() ? "1" : out;
    }
};

// A word in the generators, as a sequence of 1-based indices.
using Word = std::vector<int>;

inline Word monomial_word(const Monomial& m) {
    Word w;
    for (std::size_t i = 0; i < m.e.size(); ++i)
        for (int k = 0; k < m.e[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    return w;
}

enum class MonomialOrder { lex, wgrlex };

// B: no nilpotency, lower-order terms active.
// S: quantum symmetric (p treated as 0), nilpotency on.
// A: lower-order terms active, nilpotency on.
enum class AlgebraMode { B, S, A };

inline std::string mode_name(AlgebraMode m) {
    switch (m) {
        case AlgebraMode::B: return "B";
        case AlgebraMode::S: return "S";
        default: return "A";
    }
}

// Finite linear combination of sorted monomials with Laurent coefficients.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(n) {}

    static AlgebraElement zero(int n) { return AlgebraElement(n); }

    static AlgebraElement one(int n) {
        AlgebraElement r(n);
        r.add(Monomial::identity(n), LaurentScalar(1));
        return r;
    }

    static AlgebraElement monomial_term(Monomial m, LaurentScalar c) {
        AlgebraElement r(static_cast<int>(m.e.size()));
        r.add(std::move(m), std::move(c));
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, LaurentScalar>& terms() const { return terms_; }

    void add(const Monomial& m, const LaurentScalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(m.e.size()) != n_)
            throw IndexError("monomial length does not match generator count");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_n(o);
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same_n(o);
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
        a += b;
        return a;
    }

    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
        a -= b;
        return a;
    }

    AlgebraElement operator-() const {
        AlgebraElement r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    AlgebraElement scaled(const LaurentScalar& s) const {
        AlgebraElement r(n_);
        for (const auto& [m, c] : terms_) r.add(m, c * s);
        return r;
    }

    LaurentScalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    // The augmentation sends every generator to 0: the constant coefficient.
    LaurentScalar augmentation() const { return coefficient(Monomial::identity(n_)); }

    bool is_augmented() const { return augmentation().is_zero(); }

    AlgebraElement augmented_part() const {
        AlgebraElement r = *this;
        r.terms_.erase(Monomial::identity(n_));
        return r;
    }

    AlgebraElement substitute(const std::map<ParamIndex, Rational>& assignment) const {
        AlgebraElement r(n_);
        for (const auto& [m, c] : terms_) r.add(m, c.substitute(assignment));
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

  private:
    void require_same_n(const AlgebraElement& o) const {
        if (n_ != o.n_) throw IndexError("mixing elements over different generator counts");
    }

    int n_ = 0;
    std::map<Monomial, LaurentScalar> terms_;
};

// A PBW presentation: n generators, the first t nilpotent of orders N_i,
// commutation scalars q_ij (units), lower-order terms p_ij, weights omega.
struct Presentation {
    int n = 0;
    int t = 0;
    std::vector<int> N;
    std::map<std::pair<int, int>, LaurentScalar> q_table;
    std::map<std::pair<int, int>, AlgebraElement> p_table;
    std::vector<long> omega;
    MonomialOrder order = MonomialOrder::wgrlex;

    static Presentation make(int n, int t, std::vector<int> N,
                             MonomialOrder order = MonomialOrder::wgrlex,
                             std::vector<long> omega = {}) {
        Presentation p;
        p.n = n;
        p.t = t;
        p.N = std::move(N);
        p.order = order;
        p.omega = omega.empty() ? std::vector<long>(n, 1) : std::move(omega);
        return p;
    }

    void set_q(int i, int j, LaurentScalar v) {
        if (!(1 <= i && i < j && j <= n)) throw IndexError("q entries require 1 <= i < j <= n");
        q_table[{i, j}] = std::move(v);
    }

    void set_p(int i, int j, AlgebraElement v) {
        if (!(1 <= i && i < j && j <= n)) throw IndexError("p entries require 1 <= i < j <= n");
        if (v.is_zero())
            p_table.erase({i, j});
        else
            p_table.insert_or_assign({i, j}, std::move(v));
    }

    // Commutation scalar with the conventions q_ii = 1, q_ji = q_ij^{-1}.
    // Entries missing from the table default to the formal parameter q_ij.
    LaurentScalar q(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > n)
            throw IndexError("generator index out of range 1.." + std::to_string(n));
        if (i == j) return LaurentScalar(1);
        if (i > j) return q(j, i).inverse();
        auto it = q_table.find({i, j});
        return it == q_table.end() ? LaurentScalar::parameter(i, j) : it->second;
    }

    const AlgebraElement* p(int i, int j) const {
        auto it = p_table.find({i, j});
        return it == p_table.end() ? nullptr : &it->second;
    }

    long weight(const Monomial& m) const {
        long w = 0;
        for (int i = 0; i < n; ++i) w += static_cast<long>(m.e[i]) * omega[i];
        return w;
    }

    int nilpotency(int i) const { return (1 <= i && i <= t) ? N[i - 1] : 0; }

    int max_nilpotency() const {
        int m = 0;
        for (int v : N) m = std::max(m, v);
        return m;
    }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        if (a.n != b.n || a.t != b.t || a.N != b.N || a.omega != b.omega ||
            a.order != b.order)
            return false;
        for (int i = 1; i <= a.n; ++i)
            for (int j = i + 1; j <= a.n; ++j) {
                if (!(a.q(i, j) == b.q(i, j))) return false;
                const AlgebraElement* pa = a.p(i, j);
                const AlgebraElement* pb = b.p(i, j);
                if ((pa == nullptr) != (pb == nullptr)) return false;
                if (pa && !(*pa == *pb)) return false;
            }
        return true;
    }
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const Presentation& pres) {
    if (a.e.size() != b.e.size() || static_cast<int>(a.e.size()) != pres.n)
        throw IndexError("monomial length mismatch");
    if (pres.order == MonomialOrder::wgrlex) {
        long wa = pres.weight(a);
        long wb = pres.weight(b);
        if (wa != wb) return wa <=> wb;
    }
    // Lexicographic: the first nonzero entry of a - b decides.
    for (int i = 0; i < pres.n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
    return std::strong_ordering::equal;
}

inline long omega_degree(const AlgebraElement& f, const Presentation& pres) {
    if (f.is_zero()) throw ZeroElementError("omega-degree of the zero element");
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        long w = pres.weight(m);
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

enum class RewriteStrategy { leftmost, rightmost };

namespace detail {

constexpr long kRewriteBudget = 1000000;

inline bool word_hits_nilpotent(const Word& w, const Presentation& pres) {
    int prev = 0;
    int run = 0;
    for (int letter : w) {
        if (letter == prev)
            ++run;
        else {
            prev = letter;
            run = 1;
        }
        if (letter <= pres.t && run >= pres.N[letter - 1]) return true;
    }
    return false;
}

struct RewriteItem {
    LaurentScalar coeff;
    Word word;
};

// One application of x_j x_i -> q_ij^{-1} (x_i x_j - p_ij) at position k.
inline std::vector<RewriteItem> rewrite_at(const RewriteItem& item, std::size_t k,
                                           const Presentation& pres, AlgebraMode mode) {
    const int j = item.word[k];
    const int i = item.word[k + 1];
    const LaurentScalar qinv = pres.q(i, j).inverse();

    std::vector<RewriteItem> out;
    RewriteItem swapped{item.coeff * qinv, item.word};
    std::swap(swapped.word[k], swapped.word[k + 1]);
    out.push_back(std::move(swapped));

    if (mode != AlgebraMode::S) {
        if (const AlgebraElement* pij = pres.p(i, j)) {
            for (const auto& [pm, pc] : pij->terms()) {
                RewriteItem branch;
                branch.coeff = -(item.coeff * qinv * pc);
                branch.word.assign(item.word.begin(), item.word.begin() + k);
                Word mid = monomial_word(pm);
                branch.word.insert(branch.word.end(), mid.begin(), mid.end());
                branch.word.insert(branch.word.end(), item.word.begin() + k + 2,
                                   item.word.end());
                out.push_back(std::move(branch));
            }
        }
    }
    return out;
}

}  // namespace detail

// Rewrites a word to its canonical linear combination of sorted monomials.
// In modes S and A any word containing a factor x_i^{N_i} (i <= t) is dropped.
inline AlgebraElement normal_form(const Word& w0, const Presentation& pres,
                                  AlgebraMode mode,
                                  RewriteStrategy strategy = RewriteStrategy::leftmost) {
    for (int letter : w0)
        if (letter < 1 || letter > pres.n) throw IndexError("word letter out of range");

    const bool truncate = mode != AlgebraMode::B;
    AlgebraElement result(pres.n);
    std::vector<detail::RewriteItem> stack{{LaurentScalar(1), w0}};
    long steps = 0;

    while (!stack.empty()) {
        detail::RewriteItem item = std::move(stack.back());
        stack.pop_back();
        if (item.coeff.is_zero()) continue;
        if (truncate && detail::word_hits_nilpotent(item.word, pres)) continue;

        std::optional<std::size_t> pos;
        for (std::size_t k = 0; k + 1 < item.word.size(); ++k) {
            std::size_t kk = (strategy == RewriteStrategy::leftmost)
                                 ? k
                                 : item.word.size() - 2 - k;
            if (item.word[kk] > item.word[kk + 1]) {
                pos = kk;
                break;
            }
        }

        if (!pos) {
            Monomial m = Monomial::identity(pres.n);
            for (int letter : item.word) ++m.e[letter - 1];
            result.add(m, item.coeff);
            continue;
        }

        if (++steps > detail::kRewriteBudget)
            throw NonTerminatingError("rewrite budget exhausted; presentation is invalid");
        for (auto& next : detail::rewrite_at(item, *pos, pres, mode))
            stack.push_back(std::move(next));
    }
    return result;
}

inline AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g,
                               const Presentation& pres, AlgebraMode mode) {
    AlgebraElement result(pres.n);
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            Word w = monomial_word(mf);
            Word wg = monomial_word(mg);
            w.insert(w.end(), wg.begin(), wg.end());
            result += normal_form(w, pres, mode).scaled(cf * cg);
        }
    return result;
}

inline AlgebraElement multiply(const AlgebraElement& f, const Monomial& m,
                               const Presentation& pres, AlgebraMode mode) {
    return multiply(f, AlgebraElement::monomial_term(m, LaurentScalar(1)), pres, mode);
}

// Canonical printing, leading monomial first under the active order.
inline std::string element_str(const AlgebraElement& f, const Presentation& pres) {
    if (f.is_zero()) return "0";
    std::vector<const Monomial*> monos;
    for (const auto& [m, c] : f.terms()) monos.push_back(&m);
    std::sort(monos.begin(), monos.end(), [&](const Monomial* a, const Monomial* b) {
        return compare_monomials(*a, *b, pres) == std::strong_ordering::greater;
    });

    std::string out;
    for (const Monomial* m : monos) {
        const std::string tail = m->is_identity() ? "" : m->str();
        for (const auto& [exps, c] : f.terms().at(*m).terms()) {
            std::string body = LaurentScalar::render_product(exps, abs(c), tail);
            if (out.empty())
                out = (c < 0 ? "-" : "") + body;
            else
                out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

inline Report validate_presentation(const Presentation& pres) {
    Report report("validate");
    if (pres.n < 1) report.fail("n", "generator count must be positive");
    if (pres.t < 0 || pres.t > pres.n)
        report.fail("t", "nilpotent count must satisfy 0 <= t <= n");
    if (static_cast<int>(pres.N.size()) != pres.t)
        report.fail("N", "expected " + std::to_string(pres.t) + " entries");
    if (static_cast<int>(pres.omega.size()) != pres.n)
        report.fail("omega", "expected " + std::to_string(pres.n) + " entries");
    if (!report.passed()) return report;

    for (int i = 1; i <= pres.t; ++i) {
        if (pres.N[i - 1] < 2)
            report.fail("N[" + std::to_string(i) + "]", "N must exceed 1");
        else
            report.ok("N[" + std::to_string(i) + "]");
    }
    for (int i = 0; i < pres.n; ++i) {
        if (pres.omega[i] < 1)
            report.fail("omega[" + std::to_string(i + 1) + "]", "weights must be positive");
        else
            report.ok("omega[" + std::to_string(i + 1) + "]");
    }
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j) {
            const std::string key =
                "q." + std::to_string(i) + "." + std::to_string(j);
            if (!pres.q(i, j).is_unit())
                report.fail(key, "commutation scalar must be a unit, got " +
                                     pres.q(i, j).str());
            else
                report.ok(key);
        }
    for (const auto& [key, pij] : pres.p_table) {
        auto [i, j] = key;
        const std::string name = "p." + std::to_string(i) + "." + std::to_string(j);
        if (pij.n() != pres.n) {
            report.fail(name, "element over wrong generator count");
            continue;
        }
        if (pij.is_zero()) {
            report.ok(name);
            continue;
        }
        long deg = omega_degree(pij, pres);
        long bound = pres.omega[i - 1] + pres.omega[j - 1];
        if (deg >= bound)
            report.fail(name, "omega-degree " + std::to_string(deg) +
                                  " not below " + std::to_string(bound));
        else
            report.ok(name);
    }
    return report;
}

inline Presentation associated_graded(const Presentation& pres) {
    Presentation gr = pres;
    gr.p_table.clear();
    return gr;
}

// All monomials with omega-weight in [min_weight, max_weight], ascending in
// the storage order (deterministic).
inline std::vector<Monomial> monomials_of_weight_at_most(const Presentation& pres,
                                                         long max_weight,
                                                         long min_weight = 0) {
    std::vector<Monomial> out;
    Monomial m = Monomial::identity(pres.n);
    auto rec = [&](auto&& self, int idx, long remaining) -> void {
        if (idx == pres.n) {
            if (max_weight - remaining >= min_weight) out.push_back(m);
            return;
        }
        long w = pres.omega[idx];
        for (int k = 0; k * w <= remaining; ++k) {
            m.e[idx] = k;
            self(self, idx + 1, remaining - k * w);
        }
        m.e[idx] = 0;
    };
    rec(rec, 0, max_weight);
    return out;
}

// S-basis monomials with e_i < N_i for i <= t and e_i <= exp_bound otherwise.
inline std::vector<Monomial> bounded_basis_monomials(const Presentation& pres,
                                                     int exp_bound) {
    std::vector<Monomial> out;
    Monomial m = Monomial::identity(pres.n);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == pres.n) {
            out.push_back(m);
            return;
        }
        int hi = (idx < pres.t) ? pres.N[idx] - 1 : exp_bound;
        for (int k = 0; k <= hi; ++k) {
            m.e[idx] = k;
            self(self, idx + 1);
        }
        m.e[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

// Braided commutator [x^a, x^b]_c with the q-twist
// prod_{k<l} q_lk^{-(b_l a_k - b_k a_l)}.
inline AlgebraElement braided_bracket(const Monomial& a, const Monomial& b,
                                      const Presentation& pres, AlgebraMode mode) {
    LaurentScalar twist(1);
    for (int k = 1; k <= pres.n; ++k)
        for (int l = k + 1; l <= pres.n; ++l) {
            long expo = -(static_cast<long>(b.e[l - 1]) * a.e[k - 1] -
                          static_cast<long>(b.e[k - 1]) * a.e[l - 1]);
            if (expo != 0) twist *= pres.q(l, k).pow(expo);
        }

    Word ab = monomial_word(a);
    Word wb = monomial_word(b);
    ab.insert(ab.end(), wb.begin(), wb.end());
    Word ba = monomial_word(b);
    Word wa = monomial_word(a);
    ba.insert(ba.end(), wa.begin(), wa.end());

    return normal_form(ab, pres, mode) - normal_form(ba, pres, mode).scaled(twist);
}

// Checks [x_i^{N_i}, x^b]_c = 0 in B for every monomial of weight <= bound.
inline Report check_braided_central(int i, const Presentation& pres, long degree_bound) {
    if (i < 1 || i > pres.t) throw IndexError("braided-center check requires i <= t");
    Report report("braided-center x" + std::to_string(i) + "^" +
                  std::to_string(pres.N[i - 1]));
    Monomial a = Monomial::power(pres.n, i, pres.N[i - 1]);
    for (const Monomial& b : monomials_of_weight_at_most(pres, degree_bound, 1)) {
        AlgebraElement bracket = braided_bracket(a, b, pres, AlgebraMode::B);
        const std::string obj = "[" + a.str() + "," + b.str() + "]_c";
        if (bracket.is_zero())
            report.ok(obj);
        else
            report.fail(obj, element_str(bracket, pres));
    }
    return report;
}

// Overlap words x_k x_j x_i reduced via both parenthesizations, plus a sweep
// over all words up to the given length with two rewrite strategies.
inline Report check_confluence(const Presentation& pres, AlgebraMode mode,
                               int word_length_bound) {
    Report report("confluence mode=" + mode_name(mode));

    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j)
            for (int k = j + 1; k <= pres.n; ++k) {
                Word w{k, j, i};
                auto reduce_from = [&](std::size_t pos) {
                    AlgebraElement acc(pres.n);
                    detail::RewriteItem start{LaurentScalar(1), w};
                    for (const auto& item : detail::rewrite_at(start, pos, pres, mode)) {
                        if (mode != AlgebraMode::B &&
                            detail::word_hits_nilpotent(item.word, pres))
                            continue;
                        acc += normal_form(item.word, pres, mode).scaled(item.coeff);
                    }
                    return acc;
                };
                AlgebraElement left = reduce_from(0);
                AlgebraElement right = reduce_from(1);
                const std::string obj = "overlap x" + std::to_string(k) + "*x" +
                                        std::to_string(j) + "*x" + std::to_string(i);
                if (left == right)
                    report.ok(obj);
                else
                    report.fail(obj, element_str(left - right, pres));
            }

    std::vector<Word> frontier{{}};
    for (int len = 1; len <= word_length_bound; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int g = 1; g <= pres.n; ++g) {
                Word ext = w;
                ext.push_back(g);
                next.push_back(ext);
            }
        for (const Word& w : next) {
            AlgebraElement a = normal_form(w, pres, mode, RewriteStrategy::leftmost);
            AlgebraElement b = normal_form(w, pres, mode, RewriteStrategy::rightmost);
            std::string obj = "word [";
            for (std::size_t s = 0; s < w.size(); ++s)
                obj += (s ? "," : "") + std::to_string(w[s]);
            obj += "]";
            if (a == b)
                report.ok(obj);
            else
                report.fail(obj, element_str(a - b, pres));
        }
        frontier = std::move(next);
    }
    return report;
}

// Mode-A products of basis monomials must stay supported on basis monomials.
inline Report check_basis_closure(const Presentation& pres, long degree_bound) {
    Report report("basis-closure mode=A");
    std::vector<Monomial> basis;
    for (const Monomial& m : monomials_of_weight_at_most(pres, degree_bound, 1)) {
        bool reduced = true;
        for (int i = 0; i < pres.t; ++i)
            if (m.e[i] >= pres.N[i]) reduced = false;
        if (reduced) basis.push_back(m);
    }
    for (const Monomial& a : basis)
        for (const Monomial& b : basis) {
            AlgebraElement prod = multiply(AlgebraElement::monomial_term(a, LaurentScalar(1)),
                                           AlgebraElement::monomial_term(b, LaurentScalar(1)),
                                           pres, AlgebraMode::A);
            bool closed = true;
            for (const auto& [m, c] : prod.terms())
                for (int i = 0; i < pres.t; ++i)
                    if (m.e[i] >= pres.N[i]) closed = false;
            const std::string obj = a.str() + " * " + b.str();
            if (closed)
                report.ok(obj);
            else
                report.fail(obj, element_str(prod, pres));
        }
    return report;
}

}  // namespace qkoszul
