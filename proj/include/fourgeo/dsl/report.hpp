#pragma once

#include <span>
#include <string>

#include "fourgeo/dsl/evaluator.hpp"
#include "fourgeo/kernels/geography.hpp"
#include "fourgeo/knots/knot.hpp"
#include "fourgeo/pipeline/pipeline.hpp"

// Text renderings for the command-line front end. Every function is a pure
// function of its input, so repeated runs are byte-identical.
namespace fourgeo::dsl {

/// Human-readable summary of the reported value.
std::string render(const ScriptResult& result, const Mode& mode);

/// Header n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side; LF line endings. The
/// ratio column is rounded half-to-even at 6 places.
std::string geography_csv(std::span<const kernels::GeographyRow> rows);

/// Scatter of (chi_h, c1^2) with the lines c1^2 = 8 chi_h and 9 chi_h.
std::string geography_svg(std::span<const kernels::GeographyRow> rows);

std::string checks_text(std::span<const Check> checks);
/// Array of {name, expected, got, pass, note}.
std::string checks_json(std::span<const Check> checks);

std::string family_text(const FamilyReport& report, long n);

}  // namespace fourgeo::dsl
