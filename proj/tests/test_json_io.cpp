#include <doctest.h>

#include "twistrep/json_io.hpp"
#include "twistrep/random.hpp"
#include "twistrep/symplectic.hpp"

using namespace twistrep;

TEST_CASE("matrix wire format") {
  const Matrix l = mat_L();
  const Json j = matrix_to_json(l);
  CHECK(j["rows"] == 4);
  CHECK(j["entries"][0] == Json::array({"1", "1", "0", "-1"}));
  CHECK(matrix_from_json(j) == l);

  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = rng.matrix(1 + rng.range(0, 4), 1 + rng.range(0, 4));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }
}

TEST_CASE("matrix parsing normalizes and validates") {
  const Json j = {{"rows", 1},
                  {"cols", 2},
                  {"entries", Json::array({Json::array({"2/4", "2/4+6/-4*i"})})}};
  const Matrix m = matrix_from_json(j);
  CHECK(m.at(0, 0) == Scalar(make_rational(1, 2)));
  CHECK(m.at(0, 1) == Scalar(make_rational(1, 2), make_rational(-3, 2)));

  CHECK_THROWS_AS(matrix_from_json(Json{{"rows", 2}, {"cols", 2}}),
                  std::invalid_argument);
  Json bad = j;
  bad["rows"] = 2;
  CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);
  Json badentry = j;
  badentry["entries"][0][0] = "pi";
  CHECK_THROWS_AS(matrix_from_json(badentry), std::invalid_argument);
}

TEST_CASE("cocycle and representation round trips") {
  const SurfaceSig sig{3, 1, 0};
  Rng rng(22);
  CrossedHomData c{sig, {}};
  for (const auto& gen : generator_set(sig)) c.values[gen] = rng.vec(6);
  const auto back = cocycle_from_json(cocycle_to_json(c));
  CHECK(cocycle_eq(back, c));

  const auto rep = symplectic_rep(sig);
  const auto rep_back = rep_from_json(rep_to_json(rep));
  CHECK(rep_back.dim == rep.dim);
  CHECK(rep_back.images == rep.images);

  Json missing = cocycle_to_json(c);
  missing["values"].erase("a1");
  CHECK_THROWS_AS(cocycle_from_json(missing), std::invalid_argument);
  Json shortv = cocycle_to_json(c);
  shortv["values"]["a1"] = Json::array({"1"});
  CHECK_THROWS_AS(cocycle_from_json(shortv), std::invalid_argument);

  // images must be invertible
  Json singular = rep_to_json(rep);
  singular["images"]["a1"] = matrix_to_json(Matrix::zero(6, 6));
  CHECK_THROWS_AS(rep_from_json(singular), std::invalid_argument);
}

TEST_CASE("signature parsing") {
  CHECK(sig_from_json(Json{{"g", 2}}) == SurfaceSig{2, 0, 0});
  CHECK(sig_from_json(Json{{"g", 3}, {"p", 1}, {"r", 2}}) ==
        SurfaceSig{3, 1, 2});
  CHECK_THROWS_AS(sig_from_json(Json{{"g", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(sig_from_json(Json::array()), std::invalid_argument);
}
