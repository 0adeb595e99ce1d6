#pragma once

#include <string>
#include <vector>

#include "helpengine.hpp"
#include "exclusions.hpp"
#include "realbasis.hpp"
#include "sl2data.hpp"

namespace zchelp {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);  // "json" | "csv" | "text"

// Every renderer returns a complete artifact ending in a newline and is a
// pure function of its arguments: equal inputs give byte-identical output.
// JSON objects keep a fixed key order, CSV carries a header row plus one
// leading comment line with the run parameters.

std::string render_cyc(const CycElt& x, Format f);
std::string render_real(const RealElt& x, Format f);
std::string render_basis(const RealBasis& rb, Format f);
std::string render_classes(const ClassTable& table, Format f);

// Solver output.  The problem supplies the provenance fields and the
// character family used to print per-survivor multiplicity tables.
std::string render_solve(const HelpProblem& p, const HelpReport& rep, Format f);

// One scan (all orders of one q) and the multi-q batch.
std::string render_scan(const std::vector<HelpReport>& reports, Format f);
std::string render_verify(const std::vector<std::vector<HelpReport>>& groups,
                          Format f);

// The 2-power instance for one tower height: the group chosen for the run
// plus the full solver report.
std::string render_prop41(int64_t r, const HelpProblem& p,
                          const HelpReport& rep, Format f);

std::string render_case(const CaseReport& rep, Format f);
std::string render_dual_scan(const std::vector<DualRouteReport>& scan,
                             Format f);
std::string render_identities(int64_t r,
                              const std::vector<IdentityCheck>& checks,
                              Format f);

// Verdict-to-exit-code mapping shared by the front ends: 0 when the work is
// complete and only trivial results remain, 3 otherwise.
int solve_exit_code(const HelpReport& rep);
int scan_exit_code(const std::vector<HelpReport>& reports);

}  // namespace zchelp
