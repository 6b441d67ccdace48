#pragma once

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hopfint::cli {

inline constexpr const char* tool_version = "1.0.0";

// Exit codes: 0 all checks pass, 1 usage, 2 schema, 3 mathematical check
// failed.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_schema = 2;
inline constexpr int exit_math = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// The taft-report document: per-family integrals, cointegral tables,
/// projection classes, semisimplicity, unimodularity and z-elements, each
/// cross-checked against its closed form. Deterministic given (n, betas,
/// ds, seed), also under --jobs parallelism.
nlohmann::ordered_json taft_report_document(int n, const std::vector<std::string>& beta_tokens,
                                            const std::vector<int>& ds, std::uint64_t seed,
                                            int jobs);

std::string render_markdown(const nlohmann::ordered_json& doc);

}  // namespace hopfint::cli
