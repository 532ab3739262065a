#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/diagnostics.hpp"
#include "painleve/integrator.hpp"
#include "painleve/series.hpp"

namespace painleve {

inline constexpr std::string_view kVersion = "1.0.0";

// "RE,IM" (a lone "RE" is accepted as a real number).
complex parse_complex(std::string_view text);
// "RE,IM;RE,IM;..."
std::vector<complex> parse_path(std::string_view text);

// Flat "key = value" document; '#' starts a comment. Unknown keys and
// malformed values raise InvalidArgument.
struct RunConfigFile {
  std::optional<complex> alpha, beta, q0, p0;
  std::optional<std::vector<complex>> path;
  std::optional<std::string> out;
  IntegratorConfig config;
};
RunConfigFile parse_run_config(std::istream& in, const IntegratorConfig& defaults = {});

std::string trajectory_json(const Trajectory& traj, const std::vector<PoleRecord>& poles);

inline constexpr std::string_view kPoleCsvHeader =
    "z_star_re,z_star_im,rho_index,c_re,c_im,h_re,h_im,k_re,k_im";
std::string pole_csv_row(const PoleRecord& p);
std::string poles_csv(const std::vector<PoleRecord>& poles);
// With prm given, every row must satisfy the linear relation between h and k.
std::vector<PoleRecord> read_poles_csv(std::istream& in, const Parameters* prm = nullptr);

std::string series_json(const TaylorPair& t);
std::string series_json(const LaurentPair& l);

// name,max_abs,sample_count,scale
std::string residual_csv(const std::vector<ResidualReport>& rows);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace painleve
