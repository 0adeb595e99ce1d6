#include "zchelp/zchelp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpengine.hpp"
#include "json.hpp"
#include "exclusions.hpp"
#include "realbasis.hpp"
#include "report.hpp"
#include "sl2data.hpp"

struct zchelp_report {
    zchelp::HelpProblem problem;
    zchelp::HelpReport report;
};

namespace {

thread_local std::string g_error;

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

template <typename F>
zchelp_status guarded(F&& body) {
    try {
        g_error.clear();
        body();
        return ZCHELP_OK;
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return ZCHELP_USAGE;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return ZCHELP_SCOPE;
    } catch (const std::exception& e) {
        g_error = e.what();
        return ZCHELP_INTERNAL;
    }
}

zchelp::Format need_format(const char* format) {
    if (!format) throw std::invalid_argument("format is required");
    return zchelp::parse_format(format);
}

void need_out(void* out) {
    if (!out) throw std::invalid_argument("output pointer is required");
}

int64_t integer_key(const std::string& s) {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("power data key is not an integer");
    return v;
}

zchelp::PowerData parse_power_json(const char* text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw std::invalid_argument("power data must be a JSON object");
    zchelp::PowerData powers;
    for (const auto& [dkey, block] : doc.items()) {
        if (!block.is_object())
            throw std::invalid_argument("power data entries must be JSON objects");
        auto& slot = powers[integer_key(dkey)];
        for (const auto& [xkey, value] : block.items()) {
            if (!value.is_number_integer())
                throw std::invalid_argument("power data values must be integers");
            slot[integer_key(xkey)] = value.get<int64_t>();
        }
    }
    return powers;
}

zchelp::HelpProblem problem_from(const zchelp_solve_opts& opts) {
    zchelp::HelpProblem p;
    p.q = opts.q;
    p.n = opts.n;
    if (opts.max_char < 0) throw std::invalid_argument("max_char must be non-negative");
    for (int64_t m = 1; m <= opts.max_char; ++m) p.chars.push_back(m);
    p.normalize = opts.normalize != 0;
    if (opts.node_cap < 0) throw std::invalid_argument("node_cap must be non-negative");
    p.node_cap = opts.node_cap;
    if (opts.power_json && *opts.power_json)
        p.powers = parse_power_json(opts.power_json);
    return p;
}

void set_verdict(int* verdict, int value) {
    if (verdict) *verdict = value;
}

}  // namespace

extern "C" {

const char* zchelp_last_error(void) { return g_error.c_str(); }

void zchelp_string_free(char* s) { std::free(s); }

zchelp_status zchelp_render_basis(int64_t n, const char* format, char** out) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        *out = copy_out(zchelp::render_basis(zchelp::real_basis(n), f));
    });
}

zchelp_status zchelp_render_expand(int64_t n, int64_t i, const char* format,
                                   char** out) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        zchelp::RealElt x = zchelp::expand_to_basis(zchelp::alpha_elt(n, i));
        *out = copy_out(zchelp::render_real(x, f));
    });
}

zchelp_status zchelp_render_classes(int64_t q, const char* format, char** out) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        *out = copy_out(zchelp::render_classes(zchelp::class_table(q), f));
    });
}

zchelp_status zchelp_solve(const zchelp_solve_opts* opts, zchelp_report** out) {
    return guarded([&] {
        if (!opts) throw std::invalid_argument("options are required");
        need_out(out);
        auto rep = std::make_unique<zchelp_report>();
        rep->problem = problem_from(*opts);
        rep->report = zchelp::solve(rep->problem);
        *out = rep.release();
    });
}

int zchelp_report_complete(const zchelp_report* rep) {
    return rep && rep->report.complete ? 1 : 0;
}

int zchelp_report_all_trivial(const zchelp_report* rep) {
    return rep && rep->report.all_trivial() ? 1 : 0;
}

int64_t zchelp_report_survivor_count(const zchelp_report* rep) {
    return rep ? static_cast<int64_t>(rep->report.survivors.size()) : 0;
}

int zchelp_report_exit_code(const zchelp_report* rep) {
    return rep ? zchelp::solve_exit_code(rep->report) : ZCHELP_USAGE;
}

zchelp_status zchelp_report_render(const zchelp_report* rep, const char* format,
                                   char** out) {
    return guarded([&] {
        if (!rep) throw std::invalid_argument("report is required");
        need_out(out);
        zchelp::Format f = need_format(format);
        *out = copy_out(zchelp::render_solve(rep->problem, rep->report, f));
    });
}

void zchelp_report_free(zchelp_report* rep) { delete rep; }

zchelp_status zchelp_render_scan(int64_t q, int normalize, int64_t node_cap,
                                 const char* format, char** out, int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        if (node_cap < 0) throw std::invalid_argument("node_cap must be non-negative");
        auto reports = zchelp::scan_orders(q, normalize != 0, node_cap);
        *out = copy_out(zchelp::render_scan(reports, f));
        set_verdict(verdict, zchelp::scan_exit_code(reports));
    });
}

zchelp_status zchelp_render_verify(const int64_t* qs, int64_t count,
                                   int normalize, int64_t node_cap,
                                   const char* format, char** out,
                                   int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        if (!qs || count <= 0)
            throw std::invalid_argument("at least one group parameter is required");
        if (node_cap < 0) throw std::invalid_argument("node_cap must be non-negative");
        std::vector<std::vector<zchelp::HelpReport>> groups;
        int code = 0;
        for (int64_t i = 0; i < count; ++i) {
            groups.push_back(zchelp::scan_orders(qs[i], normalize != 0, node_cap));
            if (zchelp::scan_exit_code(groups.back()) != 0) code = 3;
        }
        *out = copy_out(zchelp::render_verify(groups, f));
        set_verdict(verdict, code);
    });
}

zchelp_status zchelp_render_prop41(int64_t r, int64_t node_cap,
                                   const char* format, char** out,
                                   int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        if (r < 2) throw std::invalid_argument("tower height must be at least 2");
        if (r > 24) throw std::domain_error("tower height exceeds desk scale");
        if (node_cap < 0) throw std::invalid_argument("node_cap must be non-negative");
        zchelp::HelpProblem p;
        p.n = int64_t(1) << r;
        p.q = zchelp::smallest_q_with_order(p.n);
        p.node_cap = node_cap;
        zchelp::HelpReport rep = zchelp::solve(p);
        *out = copy_out(zchelp::render_prop41(r, p, rep, f));
        set_verdict(verdict, zchelp::solve_exit_code(rep));
    });
}

zchelp_status zchelp_render_case(int64_t n, int64_t d, const char* format,
                                 char** out, int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        zchelp::CaseReport rep = zchelp::exclude_case(n, d);
        *out = copy_out(zchelp::render_case(rep, f));
        set_verdict(verdict, rep.excluded ? 0 : 3);
    });
}

zchelp_status zchelp_render_dual_scan(int64_t limit, const char* format,
                                      char** out, int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        if (limit < 4) throw std::invalid_argument("limit must be at least 4");
        auto scan = zchelp::degree_two_scan(limit);
        int code = 0;
        for (const auto& r : scan)
            if (!r.exact_excluded || !r.compact_excluded) code = 3;
        *out = copy_out(zchelp::render_dual_scan(scan, f));
        set_verdict(verdict, code);
    });
}

zchelp_status zchelp_render_identities(int64_t r, int64_t trials, uint64_t seed,
                                       const char* format, char** out,
                                       int* verdict) {
    return guarded([&] {
        need_out(out);
        zchelp::Format f = need_format(format);
        auto checks = zchelp::two_power_identities(r, trials, seed);
        int code = 0;
        for (const auto& c : checks)
            if (!c.pass) code = 3;
        *out = copy_out(zchelp::render_identities(r, checks, f));
        set_verdict(verdict, code);
    });
}

}  // extern "C"
