#pragma once

#include "forestmaps/series.hpp"
#include "forestmaps/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fm {

enum class Identity {
  phi_second,       // x(27x-1)Phi'' + 6Phi + 6x
  thetrat,          // 3theta - 2(27x-1)Phi' + 42Phi - 12x
  lambda_rel,       // 30Lambda - x(27x-1)Phi' - (1-24x)Phi - 3x^2
  ed_cubic,         // the two first-order relations between Psi1 and Psi2
  theta_cubic_rel,  // theta + 2Phi1 - (1-y)Phi2 + 2x + y^2
  pp1,              // Phi1 against (1-4y)^(3/2) Psi1(t) - x
  pp2,              // Phi2 against sqrt(1-4y) Psi2(t) + (1 - sqrt(1-4y))^2/4
  rs_prime_cubic,   // D R' and D S' against their numerators; S' carries a factor -2
  g_cubic_rel,      // 10uG - (u+1)(z - R + 6zS + 2(u+1)RS)
};

enum class DeName { fprime_4valent, h_4valent, w_cubic };

std::string name_of(Identity id);
std::string name_of(DeName de);
Identity parse_identity(const std::string& s);
DeName parse_de(const std::string& s);
const std::vector<Identity>& all_identities();
const std::vector<DeName>& all_des();

/// Adds delta to one coefficient of the check's input before the residual is
/// formed. The input is Phi (x^index) for the p = 4 identities, Psi1 for
/// ed_cubic and pp1, Psi2 for pp2, the x^index y^0 term of theta for
/// theta_cubic_rel, R for rs_prime_cubic, G for g_cubic_rel, and the unknown
/// series of a DE.
struct Perturbation {
  int index = 0;
  Rational delta = 1;
};

/// Bivariate residuals are reported after x -> z^2, y -> u z, so the u-power
/// of a coefficient is the y-power.
struct ResidualReport {
  std::string name;
  int input_order = 0;
  int tested_order = 0;  // residual coefficients z^0..z^tested_order are meaningful
  std::vector<ZSeries> residuals;
  bool is_zero = false;
  int first_nonzero = -1;  // lowest z-power with a nonzero coefficient
  std::string u_mode = "symbolic";
};

ResidualReport check_identity(Identity id, int order, const std::optional<Perturbation>& perturb = std::nullopt);

struct DeTerm {
  Rational coeff;
  int z_pow = 0, u_pow = 0;
  std::vector<int> derivs;  // derivative order of each factor of the unknown
};
/// Parsed from the JSON tables under data/de/.
std::vector<DeTerm> de_terms(DeName de);
std::vector<DeTerm> parse_de_terms(const std::string& json_text);
int differential_order(const std::vector<DeTerm>& terms);
int degree(const std::vector<DeTerm>& terms);

/// The unknown of each DE: F' (p = 4), H (p = 4), and 2uG - z (p = 3), which
/// is u times the W of the equation.
ZSeries de_input(DeName de, int order);
QSeries de_input(DeName de, int order, const Rational& u);

/// Residual of the DE on a truncated series, valid through order - k for a
/// DE of differential order k. Throws std::invalid_argument if that is < 0.
ZSeries de_residual(const std::vector<DeTerm>& terms, const ZSeries& y);
QSeries de_residual(const std::vector<DeTerm>& terms, const QSeries& y, const Rational& u);

ResidualReport check_de(DeName de, int order, const UMode& mode = UMode::indeterminate(),
                        const std::optional<Perturbation>& perturb = std::nullopt);

}  // namespace fm
