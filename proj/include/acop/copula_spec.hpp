#pragma once

#include <array>
#include <span>
#include <string>

#include "acop/families.hpp"
#include "acop/multiparam.hpp"

namespace acop {

/// Up to two parameters; the uniform currency of fits and experiments.
struct ParamVector {
  std::array<double, 2> v{0.0, 0.0};
  int size = 1;

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

/// Tagged copula model: one of the five one-parameter families, the outer
/// power Clayton, or the GIG family.
struct CopulaSpec {
  enum class Kind { one_param, outer_power_clayton, gig };

  Kind kind = Kind::one_param;
  FamilyId family = FamilyId::clayton;  // valid when kind == one_param
  ParamVector params;

  static CopulaSpec one_param(FamilyId f, double theta);
  static CopulaSpec outer_power_clayton(double theta, double beta);
  static CopulaSpec gig(double nu, double theta);

  OuterPowerClaytonParams opc() const;  // kind must match
  GigParams gig_params() const;

  int n_params() const { return params.size; }
  std::string name() const;

  CopulaSpec with_params(const ParamVector& p) const;
};

/// Parse "amh", "clayton", "frank", "gumbel", "joe", "opclayton", "gig".
CopulaSpec::Kind kind_from_name(const std::string& name, FamilyId* family);

void check_spec(const CopulaSpec& spec);

double log_density(const CopulaSpec& spec, std::span<const double> u);
double tau(const CopulaSpec& spec);
std::pair<double, double> tail_dependence(const CopulaSpec& spec);
double log_gen_deriv(const CopulaSpec& spec, int d, double t);

}  // namespace acop
