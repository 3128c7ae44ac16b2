#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "bubble/checkpoint.hpp"
#include "bubble/equilibrium_io.hpp"
#include "bubble/errors.hpp"
#include "bubble/profile_io.hpp"
#include "bubble/train_config.hpp"

using namespace bubble;
using namespace bubble::pinn;

TEST(Checkpoint, RoundTripIsExact) {
  const auto net = Network::xavier(5, 0.123, {1, 7, 3, 1});
  std::stringstream buf;
  write_checkpoint(buf, net);
  const auto back = read_checkpoint(buf);
  EXPECT_EQ(back.widths(), net.widths());
  EXPECT_EQ(back.parameters(), net.parameters());
}

TEST(Checkpoint, MalformedInputsRejected) {
  for (const char* text : {"", "not a checkpoint\n", "bubble-pinn-checkpoint v1\nwidths 1 2 1\n0.1 0.2\n",
                           "bubble-pinn-checkpoint v1\nwidths 1 1\n0.1 x\n",
                           "bubble-pinn-checkpoint v1\nwidths 2 1\n0.1 0.2 0.3\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_checkpoint(in), InputError) << text;
  }
  std::stringstream buf;
  write_checkpoint(buf, Network({1, 1}, Eigen::VectorXd::Zero(2)));
  std::istringstream extra(buf.str() + " 1.0\n");
  EXPECT_THROW(read_checkpoint(extra), InputError);
  EXPECT_THROW(read_checkpoint(std::filesystem::path("/nonexistent/ckpt.txt")), InputError);
}

TEST(ProfileIo, RoundTripIsExact) {
  const auto p = horn_torus_profile(0.0587, linspace(0.0, std::numbers::pi, 17));
  std::stringstream buf;
  write_profile(buf, p);
  const auto back = read_profile(buf);
  ASSERT_EQ(back.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(back.theta()[i], p.theta()[i]);
    EXPECT_EQ(back.R()[i], p.R()[i]);
    EXPECT_EQ(back.dR()[i], p.dR()[i]);
    EXPECT_EQ(back.d2R()[i], p.d2R()[i]);
  }
  EXPECT_EQ(back.source(), ProfileSource::file);
}

TEST(ProfileIo, MalformedInputsRejected) {
  for (const char* text : {"", "a,b,c,d\n0,1,0,0\n", "theta,R,dR,d2R\n0.1,1,0\n",
                           "theta,R,dR,d2R\n0.1,1,0,zz\n0.2,1,0,0\n", "theta,R,dR,d2R\n0.2,1,0,0\n0.1,1,0,0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_profile(in), InputError) << text;
  }
}

TEST(EquilibriumIo, SummaryRoundTrip) {
  const auto params = PhysicalParams::water_air();
  const auto eq = horn_torus_from_volume(params, 5e-4);
  std::stringstream buf;
  write_equilibrium_summary(buf, eq);
  const auto back = read_equilibrium_summary(buf);
  EXPECT_EQ(back.C, eq.C);
  EXPECT_EQ(back.p_g, eq.p_g);
  EXPECT_EQ(back.rho_g, eq.rho_g);
  EXPECT_EQ(back.M, eq.M);
  EXPECT_EQ(back.V, eq.V);
  std::istringstream bad("{\"C\": 1}");
  EXPECT_THROW(read_equilibrium_summary(bad), InputError);
}

TEST(EquilibriumIo, SurfaceExportRowCount) {
  const auto params = PhysicalParams::water_air();
  const auto eq = horn_torus_from_volume(params, 5e-4);
  std::ostringstream out;
  write_equilibrium_surface(out, eq, params, 5);
  std::istringstream in(out.str());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
  EXPECT_THROW(write_equilibrium_surface(out, eq, params, 1), DomainError);
}

TEST(TrainConfigIo, DefaultsAndOverrides) {
  std::istringstream in("# comment\nN = 64\nseed=3   # trailing\n\nadam_beta2 = 0.999\nboundary_form = literal\n");
  const auto c = parse_train_config(in);
  EXPECT_EQ(c.N, 64u);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.adam.beta2, 0.999);
  EXPECT_EQ(c.boundary, BoundaryForm::literal);
  EXPECT_EQ(c.epochs, 10000u);
  EXPECT_EQ(c.learning_rate, 1e-4);
  EXPECT_EQ(c.V_target, 5e-4);
}

TEST(TrainConfigIo, GammaDerivedUnlessGiven) {
  std::istringstream in("c_v = 700\n");
  const auto c = parse_train_config(in);
  EXPECT_NEAR(c.params.gamma, 1.0 + 287.05 / 700.0, 1e-15);
  std::istringstream given("c_v = 700\ngamma = 1.4\n");
  const auto g = parse_train_config(given);
  EXPECT_EQ(g.params.gamma, 1.4);
  EXPECT_THROW(g.validate(), DomainError);
}

TEST(TrainConfigIo, ErrorsAreInputErrors) {
  for (const char* text : {"N 64\n", "unknown = 1\n", "N = -3\n", "N = 2.5\n", "sigma = abc\n",
                           "sigma = inf\n", "output_bias = random\n", "boundary_form = other\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_train_config(in), InputError) << text;
  }
  EXPECT_THROW(load_train_config("/nonexistent/config.cfg"), InputError);
}

TEST(TrainConfigIo, WriteThenParseRoundTrip) {
  TrainConfig c;
  c.N = 77;
  c.seed = 12;
  c.learning_rate = 3.3e-4;
  c.output_bias = OutputBiasInit::zero;
  c.params.sigma = 0.05;
  std::stringstream buf;
  write_train_config(buf, c);
  const auto back = parse_train_config(buf);
  EXPECT_EQ(back.N, 77u);
  EXPECT_EQ(back.seed, 12u);
  EXPECT_EQ(back.learning_rate, 3.3e-4);
  EXPECT_EQ(back.output_bias, OutputBiasInit::zero);
  EXPECT_EQ(back.params.sigma, 0.05);
  EXPECT_EQ(back.params.gamma, c.params.gamma);
}
