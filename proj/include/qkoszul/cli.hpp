#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cocycles.hpp"
#include "cohomology.hpp"
#include "parse.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "resolution.hpp"

namespace qkoszul {

enum class OutputFormat { text, tsv };

struct CliOptions {
    int max_degree = 5;
    std::optional<int> exp_bound;
    int word_bound = 4;
    std::optional<int> gen;
    std::map<ParamIndex, Rational> assign;
    OutputFormat format = OutputFormat::text;
    Defect defect = Defect::none;
};

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fingerprint_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// Numeric-rational mode: substitutes the assignment into every scalar of the
// presentation. Missing parameters raise MissingParameterError.
inline Presentation apply_assignment(const Presentation& pres,
                                     const std::map<ParamIndex, Rational>& assign) {
    Presentation out = pres;
    out.q_table.clear();
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j)
            out.set_q(i, j, pres.q(i, j).substitute(assign));
    out.p_table.clear();
    for (const auto& [key, pij] : pres.p_table)
        out.set_p(key.first, key.second, pij.substitute(assign));
    return out;
}

namespace detail {

inline std::string defect_name(Defect d) {
    switch (d) {
        case Defect::d_scalar_exponent: return "d-qexp";
        case Defect::xi_scalar_exponent: return "xi-qexp";
        case Defect::zeta_coefficient_index: return "zeta-coeff";
        default: return "none";
    }
}

struct CommandRun {
    std::ostream& os;
    bool failed = false;
    std::size_t checked = 0;
    std::size_t failures = 0;

    void emit(const Report& report) {
        report.print(os);
        checked += report.checked;
        failures += report.failed;
        if (!report.passed()) failed = true;
    }

    int finish(std::chrono::steady_clock::time_point start) {
        os << "result: " << (failed ? "FAIL" : "PASS") << " checked=" << checked
           << " failed=" << failures << "\n";
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        os << "wall_time_ms=" << ms << "\n";
        return failed ? 1 : 0;
    }
};

inline void print_header(std::ostream& os, const std::string& command,
                         const CliOptions& opt, const std::string& label,
                         const std::string& fingerprint) {
    os << "command: " << command << " max_degree=" << opt.max_degree;
    if (opt.exp_bound) os << " exp_bound=" << *opt.exp_bound;
    os << " word_bound=" << opt.word_bound;
    if (opt.gen) os << " gen=" << *opt.gen;
    os << " format=" << (opt.format == OutputFormat::tsv ? "tsv" : "text");
    if (opt.defect != Defect::none) os << " inject_defect=" << defect_name(opt.defect);
    os << "\n";
    os << "presentation: " << label << " fingerprint=" << fingerprint << "\n";
}

inline int resolution_exp_bound(const Presentation& pres, const CliOptions& opt) {
    return opt.exp_bound ? *opt.exp_bound : default_exp_bound(pres);
}

inline long cocycle_exp_bound(const Presentation& pres, const CliOptions& opt) {
    return opt.exp_bound ? *opt.exp_bound : default_cocycle_bound(pres);
}

inline void run_resolution_checks(CommandRun& run, const Presentation& gr,
                                  const CliOptions& opt) {
    run.emit(verify_complex(gr, opt.max_degree, opt.defect));
    run.emit(verify_homotopy(gr, opt.max_degree, resolution_exp_bound(gr, opt)));
    run.emit(verify_exactness_at_zero(gr, resolution_exp_bound(gr, opt)));
}

inline void run_cohomology_checks(CommandRun& run, const Presentation& gr,
                                  const CliOptions& opt) {
    for (int i = 1; i <= gr.t; ++i)
        run.emit(verify_chain_map(xi_map(i), gr, opt.max_degree, opt.defect));
    for (int i = 1; i <= gr.n; ++i)
        run.emit(verify_chain_map(eta_map(i), gr, opt.max_degree));
    run.emit(verify_relations(gr, opt.max_degree));
    run.emit(verify_dual_basis(gr, opt.max_degree));
    run.emit(verify_eta_square(gr));
}

inline void print_cohomology_listing(std::ostream& os, const Presentation& gr,
                                     const CliOptions& opt) {
    std::vector<long> dims = hilbert_coefficients(gr, opt.max_degree);
    if (opt.format == OutputFormat::tsv) {
        for (int m = 0; m <= opt.max_degree; ++m)
            for (const CohomologyMonomial& mono : cohomology_basis_in_degree(m, gr))
                os << m << "\t" << mono.str() << "\n";
    } else {
        for (int m = 0; m <= opt.max_degree; ++m) {
            os << "H^" << m << " basis:";
            for (const CohomologyMonomial& mono : cohomology_basis_in_degree(m, gr))
                os << " " << mono.str();
            os << "\n";
        }
    }
    os << "hilbert:";
    for (long d : dims) os << " " << d;
    os << "\n";
}

inline bool braided_center_gate(CommandRun& run, const Presentation& pres,
                                const CliOptions& opt) {
    for (int i = 1; i <= pres.t; ++i)
        run.emit(check_braided_central(i, pres, cocycle_exp_bound(pres, opt)));
    return !run.failed;
}

}  // namespace detail

// Dispatches one verification or computation command. Exit status:
// 0 all checks pass, 1 a mathematical verification failed, 2 input error
// (the caller maps exceptions to 2).
inline int run_command(const std::string& command, const Presentation& input,
                       const CliOptions& opt, const std::string& label,
                       const std::string& fingerprint, std::ostream& os) {
    const auto start = std::chrono::steady_clock::now();
    detail::print_header(os, command, opt, label, fingerprint);
    detail::CommandRun run{os};

    Presentation pres = opt.assign.empty() ? input : apply_assignment(input, opt.assign);

    if (command == "validate") {
        run.emit(validate_presentation(pres));
        return run.finish(start);
    }

    if (command == "gr") {
        os << print_presentation(associated_graded(pres));
        return run.finish(start);
    }

    const Presentation gr = associated_graded(pres);

    if (command == "resolution-check") {
        if (!pres.p_table.empty())
            os << "note: checks run over the associated graded presentation\n";
        detail::run_resolution_checks(run, gr, opt);
        return run.finish(start);
    }

    if (command == "cohomology") {
        detail::print_cohomology_listing(os, gr, opt);
        detail::run_cohomology_checks(run, gr, opt);
        return run.finish(start);
    }

    if (command == "cocycle-table") {
        if (!detail::braided_center_gate(run, pres, opt)) {
            os << "error: braided-centrality precondition failed; "
                  "cocycle table not computed\n";
            return run.finish(start);
        }
        long bound = detail::cocycle_exp_bound(pres, opt);
        std::vector<Monomial> basis;
        for (const Monomial& m : monomials_of_weight_at_most(pres, bound, 1)) {
            bool reduced = true;
            for (int i = 0; i < pres.t; ++i)
                if (m.e[i] >= pres.N[i]) reduced = false;
            if (reduced) basis.push_back(m);
        }
        for (int i = 1; i <= pres.t; ++i) {
            if (opt.gen && *opt.gen != i) continue;
            os << "zeta" << i << " bidegree=(" << filtration_degree(i, pres) << ","
               << 2 - filtration_degree(i, pres) << ")\n";
            for (const Monomial& a : basis)
                for (const Monomial& b : basis) {
                    if (pres.weight(a) + pres.weight(b) > bound) continue;
                    LaurentScalar v = zeta(i, a, b, pres, opt.defect);
                    if (!v.is_zero())
                        os << a.str() << "\t" << b.str() << "\t" << v.str() << "\n";
                }
        }
        return run.finish(start);
    }

    if (command == "chainmap-check") {
        run.emit(verify_F_squares(gr));
        run.emit(verify_identifications(pres, opt.defect));
        return run.finish(start);
    }

    if (command == "full-verify") {
        Report validation = validate_presentation(pres);
        run.emit(validation);
        if (run.failed) return run.finish(start);

        // Mode B carries the PBW-basis hypothesis; mode-A consistency is
        // covered by the basis-closure sweep once centrality is known.
        run.emit(check_confluence(pres, AlgebraMode::B, opt.word_bound));
        if (run.failed) return run.finish(start);

        if (!detail::braided_center_gate(run, pres, opt)) return run.finish(start);

        run.emit(check_basis_closure(pres, detail::cocycle_exp_bound(pres, opt) / 2));
        if (run.failed) return run.finish(start);

        detail::run_resolution_checks(run, gr, opt);
        if (run.failed) return run.finish(start);

        detail::run_cohomology_checks(run, gr, opt);
        if (run.failed) return run.finish(start);

        for (int i = 1; i <= pres.t; ++i) {
            run.emit(verify_zeta_properties(i, pres, detail::cocycle_exp_bound(pres, opt),
                                            opt.defect));
            run.emit(verify_coboundary_on_B(i, pres,
                                            detail::cocycle_exp_bound(pres, opt),
                                            opt.defect));
        }
        if (run.failed) return run.finish(start);

        run.emit(verify_F_squares(gr));
        run.emit(verify_identifications(pres, opt.defect));
        return run.finish(start);
    }

    throw ParseError("unknown command '" + command + "'");
}

}  // namespace qkoszul
