#include "forestmaps/errors.hpp"
#include "forestmaps/hypergeometric.hpp"
#include "forestmaps/singular.hpp"

#include <doctest.h>

using namespace fm;

namespace {

const Precision kPrec{50, 1e-20};

// |a - b| <= tol, reported as a doctest check with the gap.
void near(const Real& a, const char* expected, const char* tol, const char* what) {
  Real gap = abs(a - Real(expected));
  CHECK_MESSAGE(gap <= Real(tol), what << ": got " << sci(a, 30) << " gap " << sci(gap, 3));
}

}  // namespace

TEST_SUITE("singularity_numerics") {
  TEST_CASE("hypergeometric values") {
    PrecisionScope scope(kPrec);
    auto h = [](long a1, long a2, long b1, long b2, long c, const char* x) {
      Real xv(x);
      return hyp2f1(Rational(a1, a2), Rational(b1, b2), Rational(c), xv, Real(1) - xv).value;
    };
    near(h(1, 3, 2, 3, 2, "0.9"), "1.174951174511565658325513902497605486698", "1e-35", "2F1(1/3,2/3;2;0.9)");
    near(h(1, 4, 3, 4, 2, "0.5"), "1.05865180575361752333914884275755044101", "1e-35", "2F1(1/4,3/4;2;0.5)");
    near(h(7, 3, 8, 3, 4, "0.3"), "1.722708523079217613937712054645620009115", "1e-35", "2F1(7/3,8/3;4;0.3)");
    Real y("1e-20");
    auto r = hyp2f1(Rational(1, 3), Rational(2, 3), Rational(2), Real(1) - y, y, HypMethod::near_one);
    near(r.value, "1.240490014699032111274099256786430512598", "1e-35", "2F1 near one");
    CHECK(r.error_bound < Real("1e-35"));
    auto m = hyp2f1(Rational(1, 3), Rational(2, 3), Rational(2), Real("0.5"), Real("0.5"), HypMethod::maclaurin);
    auto n1 = hyp2f1(Rational(1, 3), Rational(2, 3), Rational(2), Real("0.5"), Real("0.5"), HypMethod::near_one);
    CHECK(abs(m.value - n1.value) < Real("1e-35"));
  }

  TEST_CASE("Phi at the singular point") {
    auto v = phi_numeric(QuarticFn::phi, Rational(1, 27), kPrec);
    PrecisionScope scope(kPrec);
    near(v.value, "0.008907037581445633755573504489043749746079", "1e-25", "Phi(1/27)");
    CHECK(v.error_bound < Real("1e-20"));
    CHECK(quartic_method_gap(QuarticFn::phi, Real(1) / 27 - Real("1e-3"), Real("1e-3")) < Real("1e-30"));
    CHECK(cubic_method_gap(CubicFn::psi1, Real(1) / 64 - Real("1e-3"), Real("1e-3")) < Real("1e-30"));
  }

  TEST_CASE("four-valent radii") {
    struct Row {
      Rational u;
      const char *tau, *rho;
    };
    const Row rows[] = {
        {Rational(1, 2), "0.03701824073943101673742520063995636860326", "0.03258610782993202853122516373487760014863"},
        {Rational(1), "0.03631576948608787958159722803853336636473", "0.02832697891811931140010806675058654457741"},
        {Rational(2), "0.03231242705669725017459700921211631946207", "0.02173179112175712455266384361669934195578"},
    };
    for (const auto& r : rows) {
      PrecisionScope scope(kPrec);
      auto pr = radius(4, to_real(r.u), kPrec);
      near(pr.tau, r.tau, "1e-25", "tau");
      near(pr.rho, r.rho, "1e-25", "rho");
      CHECK(pr.regime == Regime::positive_u);
      CHECK(pr.subexp == SubexpClass::n_pow_5_2);
    }
    PrecisionScope scope(kPrec);
    near(radius(4, Real(-1) / 2, kPrec).rho, "0.04149055582775985391482378928155891191008", "1e-25", "rho(-1/2)");
    near(radius(4, Real(-1) / 4, kPrec).rho, "0.03926379643239844547593041315929797447356", "1e-25", "rho(-1/4)");
    near(quartic_affine_radius(Real(-1)), "0.04594407461848267079261054152608078678312", "1e-25", "rho(-1)");
    auto zero = radius(4, Real(0), kPrec);
    CHECK(zero.regime == Regime::zero_u);
    CHECK(zero.subexp == SubexpClass::n_pow_3);
    CHECK(abs(zero.rho - Real(1) / 27) < Real("1e-40"));
    CHECK(radius(4, Real(-1) / 2, kPrec).subexp == SubexpClass::n_pow_3_log_2);
  }

  TEST_CASE("cubic radius at u = 1") {
    PrecisionScope scope(kPrec);
    auto pr = radius(3, Real(1), kPrec);
    near(pr.tau, "0.009799767156415151975872147413960064872492", "1e-25", "tau3");
    near(pr.sigma, "0.03446315637047049681092183848098113284584", "1e-25", "sigma3");
    near(pr.rho, "0.007691358856175682962742119959382379779844", "1e-25", "rho3");
    CHECK_FALSE(pr.has_constant);
    CHECK(pr.residual < Real("1e-30"));
  }

  TEST_CASE("constants") {
    PrecisionScope scope(kPrec);
    CHECK_THROWS_AS(asymptotic_constant(3, Real(1), kPrec), std::domain_error);
    CHECK(asymptotic_constant(4, Real(1), kPrec) > 0);
    near(pi() * pi() / 384, "0.02570209479450353806988148697884414358155", "1e-40", "pi^2/384");
  }

  TEST_CASE("coefficient ratios approach one for u = 1") {
    auto rows = coefficient_asymptotic_check(4, Rational(1), {50, 100, 200}, kPrec);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].deviation < rows[0].deviation);
    CHECK(rows[2].deviation < rows[1].deviation);
  }

  TEST_CASE("precision validation") {
    CHECK_THROWS_AS((Precision{5, 1e-2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Precision{30, 1e-20}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Precision{50, 0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Precision{40, 1e-20}.validate()));
  }

  TEST_CASE("a wrong log law is rejected by the probe") {
    Precision p{18, 1e-6};
    ProbeOptions wrong;
    wrong.log_power = 2;
    PrecisionScope scope(p);
    auto rep = log_singularity_probe(Rational(-1, 2), {Real("0.9"), Real("0.99"), Real("0.999")}, p, wrong);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[2].deviation > rep.rows[0].deviation);
    ProbeOptions tight;
    tight.max_order = 50;
    CHECK_THROWS_AS(log_singularity_probe(Rational(-1, 2), {Real("0.999")}, p, tight), ScaleGuard);
  }
}
