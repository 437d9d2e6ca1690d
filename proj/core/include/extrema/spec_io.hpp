#pragma once

#include <filesystem>
#include <string>

#include "extrema/diophantine.hpp"
#include "extrema/lfunc.hpp"

namespace extrema {

/// Reads a key=value spec file. Keys: name, kind (zeta | dirichlet |
/// euler-roots), q, char_index, kappa, m, dL, roots, root_bound, delta.
/// `roots` names a CSV file relative to the spec file's directory.
LFunctionSpec load_spec(const std::filesystem::path& path);

/// Parses spec text; relative root-table paths resolve against base_dir.
LFunctionSpec parse_spec(const std::string& text, const std::filesystem::path& base_dir);

/// CSV rows `p,re_alpha_1,im_alpha_1,...`; blank lines and # comments skipped.
EulerRootTable load_roots_csv(const std::filesystem::path& path);
EulerRootTable parse_roots_csv(const std::string& text);

/// First line `M=..,T1=..,T2=..`, then rows `lambda,beta,delta`
/// (a literal `lambda,beta,delta` header row is allowed).
ChenInstance load_instance(const std::filesystem::path& path);
ChenInstance parse_instance(const std::string& text);

/// Whole file as a string; ParseError if unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace extrema
