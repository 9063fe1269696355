#pragma once

#include <filesystem>
#include <string_view>

#include "telegraph/problem.hpp"

namespace telegraph {

/// Builds a problem from line-oriented `key = value` text.
///
///   alpha, beta   constant expressions
///   domain        two comma-separated constant expressions
///   q             expression in x and t (default 0)
///   g1, g2        expressions in x (g2 defaults to 0)
///   g1x           optional closed form of g1'; otherwise differenced
///   bc            dirichlet | neumann
///   left, right   expressions in t, evaluated at x = a and x = b
///   exact         optional expression in x and t
///
/// '#' starts a comment. Throws ConfigError naming the offending line.
TelegraphProblem problem_from_config(std::string_view text, std::string_view name = "config");

TelegraphProblem load_problem_config(const std::filesystem::path& path);

}  // namespace telegraph
