#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace zchelp {

using ojson = nlohmann::ordered_json;

namespace {

int64_t small(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("coefficient exceeds int64");
    return v.get_si();
}

ojson rational(const mpq_class& v) {
    if (v.get_den() == 1) return small(v.get_num());
    return v.get_str();
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string join64(const std::vector<int64_t>& xs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

ojson cyc_json(const CycElt& x) {
    ojson coeffs = ojson::object();
    std::vector<mpz_class> canon = x.canonical();
    for (size_t e = 0; e < canon.size(); ++e)
        if (canon[e] != 0) coeffs[std::to_string(e)] = small(canon[e]);
    return ojson{{"n", x.n}, {"coeffs", std::move(coeffs)}};
}

ojson real_json(const RealElt& x) {
    ojson coeffs = ojson::object();
    for (const auto& [label, c] : x.coeffs) coeffs[label.str()] = small(c);
    return ojson{{"n", x.n}, {"coeffs", std::move(coeffs)}};
}

std::string signed_term(const mpz_class& c, const std::string& unit, bool first) {
    std::string mag = mpz_class(abs(c)).get_str();
    std::string body = unit.empty() ? mag
                     : (mag == "1" ? unit : mag + "*" + unit);
    if (first) return (c < 0 ? "-" : "") + body;
    return (c < 0 ? " - " : " + ") + body;
}

ojson eps_json(const PAVector& eps) {
    ojson out = ojson::object();
    for (const auto& [x, v] : eps.eps)
        if (v != 0) out[std::to_string(x)] = v;
    return out;
}

ojson survivor_json(const HelpProblem& p, const Survivor& s) {
    MultiplicityTable table = multiplicity_table(p, s.eps);
    ojson mults = ojson::object();
    for (size_t ci = 0; ci < table.chars.size(); ++ci) {
        ojson row = ojson::array();
        for (int64_t l = 0; 2 * l <= table.n; ++l) row.push_back(rational(table.at(ci, l)));
        mults[std::to_string(table.chars[ci])] = std::move(row);
    }
    return ojson{{"eps", eps_json(s.eps)},
                 {"trivial", s.trivial},
                 {"multiplicities", std::move(mults)}};
}

ojson solve_json(const HelpProblem& p, const HelpReport& rep) {
    ojson j;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["characters"] = rep.chars;
    j["mode"] = rep.mode;
    j["normalized"] = rep.normalize;
    j["extra_rows"] = static_cast<int64_t>(p.extra.size());
    if (p.row_filter) {
        ojson rows = ojson::array();
        for (const auto& [m, l] : *p.row_filter) rows.push_back(ojson::array({m, l}));
        j["row_filter"] = std::move(rows);
    } else {
        j["row_filter"] = nullptr;
    }
    j["node_cap"] = rep.node_cap;
    j["nodes"] = rep.nodes;
    j["field"] = rep.field_note;
    ojson survivors = ojson::array();
    for (const Survivor& s : rep.survivors) survivors.push_back(survivor_json(p, s));
    j["survivors"] = std::move(survivors);
    j["complete"] = rep.complete;
    j["incomplete_reason"] = rep.incomplete_reason;
    return j;
}

std::string solve_comment(const HelpReport& rep) {
    std::string out = "# q=" + std::to_string(rep.q) + " n=" + std::to_string(rep.n);
    out += " chars=" + join64(rep.chars, ",");
    out += " mode=" + rep.mode;
    out += " normalized=" + std::to_string(rep.normalize ? 1 : 0);
    out += " node_cap=" + std::to_string(rep.node_cap);
    out += " nodes=" + std::to_string(rep.nodes);
    out += " complete=" + std::to_string(rep.complete ? 1 : 0);
    out += " field=" + rep.field_note;
    return out + "\n";
}

std::string solve_text(const HelpProblem& p, const HelpReport& rep) {
    std::ostringstream out;
    out << "solve q=" << rep.q << " n=" << rep.n << "\n";
    out << "  characters " << join64(rep.chars, " ") << "\n";
    out << "  mode " << rep.mode << ", normalized " << (rep.normalize ? "yes" : "no")
        << ", extra rows " << p.extra.size();
    if (p.row_filter) out << ", row filter " << p.row_filter->size() << " rows";
    out << "\n";
    out << "  field: " << rep.field_note << "\n";
    out << "  nodes " << rep.nodes << " (cap " << rep.node_cap << ")\n";
    for (size_t i = 0; i < rep.survivors.size(); ++i) {
        const Survivor& s = rep.survivors[i];
        out << "  survivor " << i << (s.trivial ? " (trivial):" : " (nontrivial):");
        for (const auto& [x, v] : s.eps.eps)
            if (v != 0) out << " eps[" << x << "]=" << v;
        out << "\n";
    }
    out << "  complete: " << (rep.complete ? "yes" : "no");
    if (!rep.complete) out << " (" << rep.incomplete_reason << ")";
    out << "\n";
    out << "  all trivial: " << (rep.all_trivial() ? "yes" : "no") << "\n";
    return out.str();
}

ojson scan_row(const HelpReport& r) {
    return ojson{{"n", r.n},
                 {"complete", r.complete},
                 {"all_trivial", r.all_trivial()},
                 {"survivors", static_cast<int64_t>(r.survivors.size())},
                 {"nodes", r.nodes}};
}

bool scan_pass(const std::vector<HelpReport>& reports) {
    for (const HelpReport& r : reports)
        if (!r.complete || !r.all_trivial()) return false;
    return true;
}

std::string scan_text(const std::vector<HelpReport>& reports) {
    std::ostringstream out;
    for (const HelpReport& r : reports) {
        out << "  n=" << r.n << ": "
            << (r.complete ? "complete" : "incomplete") << ", "
            << r.survivors.size() << " survivor"
            << (r.survivors.size() == 1 ? "" : "s") << ", "
            << (r.all_trivial() ? "all trivial" : "NONTRIVIAL") << "\n";
    }
    return out.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_cyc(const CycElt& x, Format f) {
    std::vector<mpz_class> canon = x.canonical();
    switch (f) {
        case Format::json:
            return dump(cyc_json(x));
        case Format::csv: {
            std::string out = "# n=" + std::to_string(x.n) + "\nexponent,coeff\n";
            for (size_t e = 0; e < canon.size(); ++e)
                if (canon[e] != 0)
                    out += std::to_string(e) + "," + canon[e].get_str() + "\n";
            return out;
        }
        case Format::text: {
            std::string out;
            bool first = true;
            for (size_t e = 0; e < canon.size(); ++e) {
                if (canon[e] == 0) continue;
                std::string unit =
                    e == 0 ? "" : e == 1 ? "zeta" : "zeta^" + std::to_string(e);
                out += signed_term(canon[e], unit, first);
                first = false;
            }
            if (first) out = "0";
            return out + "\n";
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_real(const RealElt& x, Format f) {
    switch (f) {
        case Format::json:
            return dump(real_json(x));
        case Format::csv: {
            std::string out = "# n=" + std::to_string(x.n) + "\nlabel,coeff\n";
            for (const auto& [label, c] : x.coeffs)
                out += label.str() + "," + c.get_str() + "\n";
            return out;
        }
        case Format::text: {
            std::string out;
            bool first = true;
            for (const auto& [label, c] : x.coeffs) {
                out += signed_term(c, label.is_one ? "" : label.str(), first);
                first = false;
            }
            if (first) out = "0";
            return out + "\n";
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_basis(const RealBasis& rb, Format f) {
    switch (f) {
        case Format::json: {
            ojson labels = ojson::array();
            for (const BasisLabel& l : rb.labels) labels.push_back(l.str());
            return dump(ojson{{"n", rb.n},
                              {"labels", std::move(labels)},
                              {"residues", rb.residues}});
        }
        case Format::csv: {
            std::string out = "# n=" + std::to_string(rb.n) + "\nlabel,pair_low,pair_high\n";
            for (const BasisLabel& l : rb.labels) {
                int64_t lo = l.is_one ? rb.n / 2 : l.rep;
                int64_t hi = l.is_one ? rb.n / 2 : ((rb.n - l.rep) % rb.n);
                out += l.str() + "," + std::to_string(lo) + "," + std::to_string(hi) + "\n";
            }
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "basis at n=" << rb.n << " (" << rb.labels.size() << " labels):";
            for (const BasisLabel& l : rb.labels) out << " " << l.str();
            out << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_classes(const ClassTable& table, Format f) {
    switch (f) {
        case Format::json: {
            ojson classes = ojson::array();
            for (const ConjClass& c : table.classes)
                classes.push_back(ojson{{"label", c.label},
                                        {"order", c.element_order},
                                        {"size", c.size},
                                        {"partner", c.central_shift_partner}});
            return dump(ojson{{"q", table.grp.q},
                              {"field", table.field_note},
                              {"classes", std::move(classes)}});
        }
        case Format::csv: {
            std::string out = "# q=" + std::to_string(table.grp.q) +
                              " field=" + table.field_note + "\n";
            out += "label,order,size,partner\n";
            for (const ConjClass& c : table.classes)
                out += c.label + "," + std::to_string(c.element_order) + "," +
                       std::to_string(c.size) + "," + c.central_shift_partner + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "classes of SL(2," << table.grp.q << "), field: "
                << table.field_note << "\n";
            for (const ConjClass& c : table.classes)
                out << "  " << c.label << ": order " << c.element_order
                    << ", size " << c.size << ", partner " << c.central_shift_partner
                    << "\n";
            out << "  total " << table.classes.size() << " classes\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_solve(const HelpProblem& p, const HelpReport& rep, Format f) {
    switch (f) {
        case Format::json:
            return dump(solve_json(p, rep));
        case Format::csv: {
            std::string out = solve_comment(rep);
            out += "class_rep,eps,survivor,trivial\n";
            for (size_t i = 0; i < rep.survivors.size(); ++i) {
                const Survivor& s = rep.survivors[i];
                for (int64_t x = 0; 2 * x <= rep.n; ++x)
                    out += std::to_string(x) + "," + std::to_string(s.eps.at(x)) +
                           "," + std::to_string(i) + "," +
                           (s.trivial ? "1" : "0") + "\n";
            }
            return out;
        }
        case Format::text:
            return solve_text(p, rep);
    }
    throw std::logic_error("unhandled format");
}

std::string render_scan(const std::vector<HelpReport>& reports, Format f) {
    int64_t q = reports.empty() ? 0 : reports.front().q;
    switch (f) {
        case Format::json: {
            ojson orders = ojson::array();
            for (const HelpReport& r : reports) orders.push_back(scan_row(r));
            return dump(ojson{{"q", q},
                              {"orders", std::move(orders)},
                              {"pass", scan_pass(reports)}});
        }
        case Format::csv: {
            std::string out = "# q=" + std::to_string(q) + "\n";
            out += "n,complete,all_trivial,survivors,nodes\n";
            for (const HelpReport& r : reports)
                out += std::to_string(r.n) + "," + (r.complete ? "1" : "0") + "," +
                       (r.all_trivial() ? "1" : "0") + "," +
                       std::to_string(r.survivors.size()) + "," +
                       std::to_string(r.nodes) + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "scan q=" << q << "\n" << scan_text(reports);
            out << "  verdict: " << (scan_pass(reports) ? "pass" : "FAIL") << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_verify(const std::vector<std::vector<HelpReport>>& groups,
                          Format f) {
    bool pass = true;
    for (const auto& g : groups) pass = pass && scan_pass(g);
    switch (f) {
        case Format::json: {
            ojson rows = ojson::array();
            for (const auto& g : groups) {
                ojson orders = ojson::array();
                for (const HelpReport& r : g) orders.push_back(scan_row(r));
                rows.push_back(ojson{{"q", g.empty() ? 0 : g.front().q},
                                     {"orders", std::move(orders)},
                                     {"pass", scan_pass(g)}});
            }
            return dump(ojson{{"groups", std::move(rows)}, {"pass", pass}});
        }
        case Format::csv: {
            std::string out = "q,n,complete,all_trivial,survivors\n";
            for (const auto& g : groups)
                for (const HelpReport& r : g)
                    out += std::to_string(r.q) + "," + std::to_string(r.n) + "," +
                           (r.complete ? "1" : "0") + "," +
                           (r.all_trivial() ? "1" : "0") + "," +
                           std::to_string(r.survivors.size()) + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            for (const auto& g : groups) {
                out << "q=" << (g.empty() ? 0 : g.front().q) << ": "
                    << (scan_pass(g) ? "pass" : "FAIL") << "\n";
                out << scan_text(g);
            }
            out << "verdict: " << (pass ? "pass" : "FAIL") << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_prop41(int64_t r, const HelpProblem& p,
                          const HelpReport& rep, Format f) {
    switch (f) {
        case Format::json: {
            ojson j;
            j["r"] = r;
            j["solve"] = solve_json(p, rep);
            return dump(j);
        }
        case Format::csv: {
            std::string out = "# r=" + std::to_string(r) + "\n";
            return out + render_solve(p, rep, Format::csv);
        }
        case Format::text: {
            std::string out = "two-power order run, r=" + std::to_string(r) + "\n";
            return out + solve_text(p, rep);
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_case(const CaseReport& rep, Format f) {
    switch (f) {
        case Format::json:
            return dump(ojson{{"n", rep.n},
                              {"d", rep.d},
                              {"profiles", rep.profiles},
                              {"max_abs_gap", rep.max_abs_gap},
                              {"bound_violations", rep.bound_violations},
                              {"fatal_profiles", rep.fatal_profiles},
                              {"excluded", rep.excluded}});
        case Format::csv: {
            std::string out = "n,d,profiles,max_abs_gap,bound_violations,fatal_profiles,excluded\n";
            out += std::to_string(rep.n) + "," + std::to_string(rep.d) + "," +
                   std::to_string(rep.profiles) + "," +
                   std::to_string(rep.max_abs_gap) + "," +
                   std::to_string(rep.bound_violations) + "," +
                   std::to_string(rep.fatal_profiles) + "," +
                   (rep.excluded ? "1" : "0") + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "case n=" << rep.n << " d=" << rep.d << ": " << rep.profiles
                << " admissible profiles, max |gap coefficient| " << rep.max_abs_gap
                << ", bound violations " << rep.bound_violations
                << ", fatal profiles " << rep.fatal_profiles << "\n";
            out << "  excluded: " << (rep.excluded ? "yes" : "NO") << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_dual_scan(const std::vector<DualRouteReport>& scan,
                             Format f) {
    std::vector<int64_t> disagreements;
    for (const DualRouteReport& r : scan)
        if (r.exact_excluded != r.compact_excluded) disagreements.push_back(r.n);
    switch (f) {
        case Format::json: {
            ojson orders = ojson::array();
            for (const DualRouteReport& r : scan)
                orders.push_back(ojson{{"n", r.n},
                                       {"profiles", r.profiles},
                                       {"exact_max_gap", r.exact_max_gap},
                                       {"compact_max_gap", r.compact_max_gap},
                                       {"exact_excluded", r.exact_excluded},
                                       {"compact_excluded", r.compact_excluded}});
            return dump(ojson{{"orders", std::move(orders)},
                              {"discrepancies", disagreements}});
        }
        case Format::csv: {
            std::string out =
                "n,profiles,exact_max_gap,compact_max_gap,exact_excluded,compact_excluded\n";
            for (const DualRouteReport& r : scan)
                out += std::to_string(r.n) + "," + std::to_string(r.profiles) + "," +
                       std::to_string(r.exact_max_gap) + "," +
                       std::to_string(r.compact_max_gap) + "," +
                       (r.exact_excluded ? "1" : "0") + "," +
                       (r.compact_excluded ? "1" : "0") + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "degree 2 scan, both routes\n";
            for (const DualRouteReport& r : scan) {
                out << "  n=" << r.n << ": exact "
                    << (r.exact_excluded ? "excluded" : "NOT EXCLUDED")
                    << " (max gap " << r.exact_max_gap << "), compact "
                    << (r.compact_excluded ? "excluded" : "NOT EXCLUDED")
                    << " (max gap " << r.compact_max_gap << ")\n";
            }
            out << "  route disagreements:";
            if (disagreements.empty()) out << " none";
            for (int64_t n : disagreements) out << " " << n;
            out << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

std::string render_identities(int64_t r,
                              const std::vector<IdentityCheck>& checks,
                              Format f) {
    bool all = true;
    for (const IdentityCheck& c : checks) all = all && c.pass;
    switch (f) {
        case Format::json: {
            ojson rows = ojson::array();
            for (const IdentityCheck& c : checks)
                rows.push_back(ojson{{"label", c.label},
                                     {"pass", c.pass},
                                     {"cases", c.cases},
                                     {"detail", c.detail}});
            return dump(ojson{{"r", r}, {"checks", std::move(rows)}, {"all_pass", all}});
        }
        case Format::csv: {
            std::string out = "# r=" + std::to_string(r) + "\nlabel,pass,cases\n";
            for (const IdentityCheck& c : checks)
                out += c.label + "," + (c.pass ? "1" : "0") + "," +
                       std::to_string(c.cases) + "\n";
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "identity checks, r=" << r << "\n";
            for (const IdentityCheck& c : checks) {
                out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.label
                    << " (" << c.cases << " cases)";
                if (!c.pass) out << ": " << c.detail;
                out << "\n";
            }
            out << "  all pass: " << (all ? "yes" : "NO") << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unhandled format");
}

int solve_exit_code(const HelpReport& rep) {
    return rep.complete && rep.all_trivial() ? 0 : 3;
}

int scan_exit_code(const std::vector<HelpReport>& reports) {
    for (const HelpReport& r : reports)
        if (solve_exit_code(r) != 0) return 3;
    return 0;
}

}  // namespace zchelp
