#pragma once

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"

namespace qkoszul {

namespace detail {

// Recursive-descent parser for the expression grammar shared by scalars and
// elements: sums of products of rationals, parameters q<i>_<j>^<e>, and (in
// element mode) generator powers x<i>^<e>.
class ExprParser {
  public:
    ExprParser(std::string_view text, int n, int line)
        : s_(text), n_(n), line_(line) {}

    LaurentScalar scalar() {
        LaurentScalar out = sum(false);
        expect_end();
        return out;
    }

    AlgebraElement element() {
        if (n_ < 1) throw ParseError("element expression needs a generator count", line_);
        AlgebraElement out(n_);
        bool negated = try_consume('-');
        while (true) {
            auto [coeff, exps] = term(true);
            out.add(Monomial{exps}, negated ? -coeff : coeff);
            skip_ws();
            if (at_end()) break;
            char op = take();
            if (op == '+')
                negated = false;
            else if (op == '-')
                negated = true;
            else
                fail(std::string("expected '+' or '-', got '") + op + "'");
        }
        return out;
    }

  private:
    LaurentScalar sum(bool element_mode) {
        LaurentScalar out(0);
        bool negated = try_consume('-');
        while (true) {
            auto [coeff, exps] = term(element_mode);
            out += negated ? -coeff : coeff;
            skip_ws();
            if (at_end()) break;
            char op = take();
            if (op == '+')
                negated = false;
            else if (op == '-')
                negated = true;
            else
                fail(std::string("expected '+' or '-', got '") + op + "'");
        }
        return out;
    }

    std::pair<LaurentScalar, std::vector<int>> term(bool element_mode) {
        LaurentScalar coeff(1);
        std::vector<int> exps(std::max(n_, 0), 0);
        factor(coeff, exps, element_mode);
        while (true) {
            skip_ws();
            if (!try_consume('*')) break;
            factor(coeff, exps, element_mode);
        }
        return {coeff, exps};
    }

    void factor(LaurentScalar& coeff, std::vector<int>& exps, bool element_mode) {
        skip_ws();
        if (at_end()) fail("unexpected end of expression");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= LaurentScalar(rational_literal());
            return;
        }
        if (c == 'q') {
            ++pos_;
            int i = integer_literal("parameter index");
            if (!try_consume('_')) fail("expected '_' in parameter name");
            int j = integer_literal("parameter index");
            if (i >= j) fail("parameters require i<j");
            long e = 1;
            if (try_consume('^')) e = signed_integer_literal();
            coeff *= LaurentScalar::parameter(i, j).pow(e);
            return;
        }
        if (c == 'x') {
            if (!element_mode) fail("generators are not allowed in a scalar expression");
            ++pos_;
            int i = integer_literal("generator index");
            if (i < 1 || i > n_)
                fail("generator index out of range 1.." + std::to_string(n_));
            long e = 1;
            if (try_consume('^')) {
                e = signed_integer_literal();
                if (e < 0) fail("generator exponents must be nonnegative");
            }
            exps[i - 1] += static_cast<int>(e);
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Rational rational_literal() {
        std::string num = digits("number");
        if (try_consume('/')) {
            std::string den = digits("denominator");
            mpz_class d(den);
            if (d == 0) fail("zero denominator");
            Rational r{mpz_class(num), d};
            r.canonicalize();
            return r;
        }
        return Rational(mpz_class(num));
    }

    int integer_literal(const std::string& what) {
        std::string d = digits(what);
        return std::stoi(d);
    }

    long signed_integer_literal() {
        bool neg = try_consume('-');
        long v = std::stol(digits("exponent"));
        return neg ? -v : v;
    }

    std::string digits(const std::string& what) {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            out += take();
        if (out.empty()) fail("expected " + what);
        return out;
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) fail(std::string("trailing input at '") + peek() + "'");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (at_end() || peek() != c) return false;
        ++pos_;
        return true;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

    std::string_view s_;
    std::size_t pos_ = 0;
    int n_;
    int line_;
};

inline std::vector<long> int_list(const std::string& value, int line) {
    std::vector<long> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        try {
            out.push_back(std::stol(token));
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + token + "'", line);
        }
        token.clear();
    };
    for (char c : value) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
            flush();
        else
            token += c;
    }
    flush();
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline LaurentScalar parse_scalar(const std::string& text, int line = 0) {
    return detail::ExprParser(text, 0, line).scalar();
}

inline AlgebraElement parse_element(const std::string& text, int n, int line = 0) {
    return detail::ExprParser(text, n, line).element();
}

// Key-value presentation file. Keys: n, t, N, order, omega, q.<i>.<j>,
// p.<i>.<j>. Lines starting with '#' (or trailing '#' parts) are comments.
// Unknown and duplicate keys are errors.
inline Presentation parse_presentation(const std::string& content) {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry> entries;

    std::istringstream in(content);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no);
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
        entries[key] = {value, line_no};
    }

    auto take = [&](const std::string& key) -> std::optional<Entry> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        Entry e = it->second;
        entries.erase(it);
        return e;
    };

    auto n_entry = take("n");
    if (!n_entry) throw ParseError("missing required key 'n'");
    auto n_list = detail::int_list(n_entry->value, n_entry->line);
    if (n_list.size() != 1 || n_list[0] < 1)
        throw ParseError("n must be a single positive integer", n_entry->line);
    const int n = static_cast<int>(n_list[0]);

    int t = 0;
    if (auto e = take("t")) {
        auto list = detail::int_list(e->value, e->line);
        if (list.size() != 1 || list[0] < 0 || list[0] > n)
            throw ParseError("t must be a single integer in 0..n", e->line);
        t = static_cast<int>(list[0]);
    }

    std::vector<int> N;
    if (auto e = take("N")) {
        for (long v : detail::int_list(e->value, e->line))
            N.push_back(static_cast<int>(v));
        if (static_cast<int>(N.size()) != t)
            throw ParseError("N must list exactly t = " + std::to_string(t) +
                                 " integers",
                             e->line);
    } else if (t > 0) {
        throw ParseError("missing key 'N' (required when t > 0)");
    }

    MonomialOrder order = MonomialOrder::wgrlex;
    if (auto e = take("order")) {
        if (e->value == "lex")
            order = MonomialOrder::lex;
        else if (e->value == "wgrlex")
            order = MonomialOrder::wgrlex;
        else
            throw ParseError("order must be 'lex' or 'wgrlex'", e->line);
    }

    std::vector<long> omega(n, 1);
    if (auto e = take("omega")) {
        omega = detail::int_list(e->value, e->line);
        if (static_cast<int>(omega.size()) != n)
            throw ParseError("omega must list exactly n = " + std::to_string(n) +
                                 " integers",
                             e->line);
    }

    Presentation pres = Presentation::make(n, t, N, order, omega);

    auto parse_pair_key = [&](const std::string& key, int line) {
        // key has the form "<i>.<j>"
        auto dot = key.find('.');
        if (dot == std::string::npos)
            throw ParseError("expected '<i>.<j>' in key", line);
        auto parse_int = [&](const std::string& s) {
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("expected an index in key, got '" + s + "'", line);
            if (s.empty()) throw ParseError("missing index in key", line);
            return std::stoi(s);
        };
        int i = parse_int(key.substr(0, dot));
        int j = parse_int(key.substr(dot + 1));
        if (i >= j) throw ParseError("parameters require i<j", line);
        if (i < 1 || j > n)
            throw ParseError("index out of range 1.." + std::to_string(n), line);
        return std::make_pair(i, j);
    };

    for (auto it = entries.begin(); it != entries.end();) {
        const std::string& key = it->first;
        const Entry& entry = it->second;
        if (key.rfind("q.", 0) == 0) {
            auto [i, j] = parse_pair_key(key.substr(2), entry.line);
            pres.set_q(i, j, parse_scalar(entry.value, entry.line));
            it = entries.erase(it);
        } else if (key.rfind("p.", 0) == 0) {
            auto [i, j] = parse_pair_key(key.substr(2), entry.line);
            pres.set_p(i, j, parse_element(entry.value, n, entry.line));
            it = entries.erase(it);
        } else {
            throw ParseError("unknown key '" + key + "'", entry.line);
        }
    }
    return pres;
}

inline Presentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
}

// Canonical printing; parsing the output reproduces an equal presentation.
inline std::string print_presentation(const Presentation& pres) {
    std::ostringstream out;
    out << "n = " << pres.n << "\n";
    out << "t = " << pres.t << "\n";
    if (pres.t > 0) {
        out << "N =";
        for (int v : pres.N) out << " " << v;
        out << "\n";
    }
    out << "order = " << (pres.order == MonomialOrder::lex ? "lex" : "wgrlex") << "\n";
    out << "omega =";
    for (long v : pres.omega) out << " " << v;
    out << "\n";
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j)
            out << "q." << i << "." << j << " = " << pres.q(i, j).str() << "\n";
    for (const auto& [key, pij] : pres.p_table) {
        if (pij.is_zero()) continue;
        out << "p." << key.first << "." << key.second << " = "
            << element_str(pij, pres) << "\n";
    }
    return out.str();
}

}  // namespace qkoszul
