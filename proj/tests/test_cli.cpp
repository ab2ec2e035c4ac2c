// End-to-end checks of the command line tool: exit codes, JSON payloads,
// and byte-stable output. Each case shells out to the built binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "twistrep/cocycle.hpp"
#include "twistrep/json_io.hpp"
#include "twistrep/random.hpp"
#include "twistrep/symplectic.hpp"

using namespace twistrep;
namespace fs = std::filesystem;

namespace {

const std::string kCli = TWISTREP_CLI_PATH;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("twistrep_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const {
    return (dir / name).string();
  }
};

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args).c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("gen bundle") {
  Scratch tmp;
  const auto out = tmp.path("gen.json");
  CHECK(run("gen --genus 2 -o " + out) == 0);
  const Json bundle = Json::parse(slurp(out));
  CHECK(bundle["c1"]["entries"][0] == Json::array({"1", "1", "0", "-1"}));
  CHECK(bundle.contains("G"));
  CHECK(bundle.contains("J"));
  // stable key order
  std::vector<std::string> keys;
  for (auto it = bundle.begin(); it != bundle.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"sig", "a1", "b1", "a2", "b2", "c1",
                                         "G", "J"});
  // deterministic byte-for-byte
  const auto out2 = tmp.path("gen2.json");
  CHECK(run("gen --genus 2 -o " + out2) == 0);
  CHECK(slurp(out) == slurp(out2));

  CHECK(run("gen --genus 1 -o " + tmp.path("nope.json")) == 2);
}

TEST_CASE("relcheck") {
  Scratch tmp;
  CHECK(run("relcheck --genus 5 -o " + tmp.path("r5.json")) == 0);
  CHECK(run("relcheck --genus 8 -o " + tmp.path("r8.json")) == 0);

  // perturb one image: the report must name the failing relation
  GeneratorRep rep = symplectic_rep({2, 0, 0});
  rep.images[{Family::A, 1}].at(0, 2) = Scalar(7);
  const auto repfile = tmp.path("rep.json");
  spit(repfile, rep_to_json(rep).dump());
  const auto report_path = tmp.path("report.json");
  CHECK(run("relcheck -i " + repfile + " -o " + report_path) == 1);
  const Json report = Json::parse(slurp(report_path));
  CHECK(report["pass"] == false);
  REQUIRE(!report["failures"].empty());
  const std::string lhs = report["failures"][0]["lhs"];
  CHECK(lhs.find("a1") != std::string::npos);

  spit(tmp.path("garbage.json"), "{not json");
  CHECK(run("relcheck -i " + tmp.path("garbage.json")) == 2);
}

TEST_CASE("build-rep, analyze, classify pipeline") {
  Scratch tmp;
  const SurfaceSig sig{2, 0, 0};
  const auto cocycle_file = tmp.path("c.json");
  spit(cocycle_file, cocycle_to_json(zero_cocycle(sig)).dump());

  const auto rep_file = tmp.path("phi0.json");
  CHECK(run("build-rep -i " + cocycle_file + " -o " + rep_file) == 0);
  CHECK(run("analyze -i " + rep_file + " -o " + tmp.path("an.json")) == 0);
  const Json an = Json::parse(slurp(tmp.path("an.json")));
  CHECK(an["pass"] == true);
  CHECK(an["generators"]["a1"]["eigenspace_dim_one"] == 4);

  const auto verdict_file = tmp.path("cls.json");
  CHECK(run("classify -i " + rep_file + " -o " + verdict_file) == 0);
  const Json verdict = Json::parse(slurp(verdict_file));
  CHECK(verdict["verdict"] == "TypeA");
  CHECK(cocycle_eq(cocycle_from_json(verdict["cocycle"]), zero_cocycle(sig)));

  // dualize a nonzero phi_c: classify must answer TypeB with the cocycle
  Rng rng(23);
  const auto c = principal_cocycle(sig, rng.nonzero_vec(4));
  const auto rep = build_phi_c(c);
  GeneratorRep dual{sig, 5, {}};
  for (const auto& [gen, m] : rep.images) dual.images[gen] = dual_rep(m);
  const auto dual_file = tmp.path("dual.json");
  spit(dual_file, rep_to_json(dual).dump());
  const auto verdict2_file = tmp.path("cls2.json");
  CHECK(run("classify -i " + dual_file + " -o " + verdict2_file) == 0);
  const Json verdict2 = Json::parse(slurp(verdict2_file));
  CHECK(verdict2["verdict"] == "TypeB");
  CHECK(cocycle_eq(cocycle_from_json(verdict2["cocycle"]), c));

  // an inconsistent assignment is refused with exit 1 and the violation list
  CrossedHomData bad{sig, {}};
  for (const auto& gen : generator_set(sig)) bad.values[gen] = rng.vec(4);
  spit(tmp.path("bad.json"), cocycle_to_json(bad).dump());
  const auto bad_report = tmp.path("bad_report.json");
  CHECK(run("build-rep -i " + tmp.path("bad.json") + " -o " + bad_report) ==
        1);
  CHECK(!Json::parse(slurp(bad_report))["violations"].empty());
}

TEST_CASE("normalize") {
  Scratch tmp;
  const int g = 3;
  SUBCASE("canonical chain in dimension 2g+1") {
    Json j;
    j["sig"] = sig_to_json({g, 0, 0});
    j["dim"] = 2 * g + 1;
    Json images;
    for (int k = 1; k <= g - 1; ++k)
      images["c" + std::to_string(k)] = matrix_to_json(
          diag_blocks({def_C(g, k), Matrix::identity(1)}));
    j["images"] = std::move(images);
    spit(tmp.path("chain.json"), j.dump());
    const auto report_path = tmp.path("norm.json");
    CHECK(run("normalize -i " + tmp.path("chain.json") + " -o " +
              report_path) == 0);
    const Json report = Json::parse(slurp(report_path));
    CHECK(report["verdict"] == "pass");
    CHECK(report["p_list"] == Json::array({"1", "1"}));
  }
  SUBCASE("violations exit 1 with the stage name") {
    Json j;
    j["sig"] = sig_to_json({g, 0, 0});
    j["dim"] = 2 * g;
    Json images;
    images["c1"] = matrix_to_json(def_A(g, 1));
    images["c2"] = matrix_to_json(def_C(g, 2));
    j["images"] = std::move(images);
    spit(tmp.path("chain2g.json"), j.dump());
    const auto report_path = tmp.path("norm2g.json");
    CHECK(run("normalize -i " + tmp.path("chain2g.json") + " -o " +
              report_path) == 1);
    const Json report = Json::parse(slurp(report_path));
    CHECK(report["verdict"] == "fail");
    CHECK(report["stage"] == "iv");
    CHECK(report["k"] == 1);
  }
}

TEST_CASE("equiv") {
  Scratch tmp;
  const SurfaceSig sig{2, 0, 0};
  Rng rng(24);
  const auto c2 = principal_cocycle(sig, rng.nonzero_vec(4));
  const auto c1 = cocycle_add(cocycle_scale(Scalar(3), c2),
                              principal_cocycle(sig, rng.vec(4)));
  spit(tmp.path("c1.json"), cocycle_to_json(c1).dump());
  spit(tmp.path("c2.json"), cocycle_to_json(c2).dump());
  const auto cert_path = tmp.path("cert.json");
  CHECK(run("equiv " + tmp.path("c1.json") + " " + tmp.path("c2.json") +
            " -o " + cert_path) == 0);
  const Json cert = Json::parse(slurp(cert_path));
  CHECK(cert["equivalent"] == true);
  CHECK(cert.contains("mu"));

  // zero against a non-principal assignment is infeasible
  auto noncob = zero_cocycle(sig);
  noncob.values[{Family::A, 1}][1] = Scalar(1);
  spit(tmp.path("z.json"), cocycle_to_json(zero_cocycle(sig)).dump());
  spit(tmp.path("nc.json"), cocycle_to_json(noncob).dump());
  CHECK(run("equiv " + tmp.path("z.json") + " " + tmp.path("nc.json") +
            " -o " + tmp.path("cert2.json")) == 1);
}

TEST_CASE("stdin/stdout piping") {
  Scratch tmp;
  const auto cocycle_file = tmp.path("c.json");
  spit(cocycle_file, cocycle_to_json(zero_cocycle({2, 0, 0})).dump());
  const auto out = tmp.path("piped.json");
  const int status = std::system(
      ("cat " + cocycle_file + " | " + kCli + " build-rep -i - -o - > " + out)
          .c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 0);
  const auto rep = rep_from_json(Json::parse(slurp(out)));
  CHECK(rep.dim == 5);
}

TEST_CASE("usage errors") {
  CHECK(run("frobnicate 2>/dev/null") == 2);
  CHECK(run("build-rep 2>/dev/null") == 2);
  CHECK(run("build-rep -i /nonexistent.json 2>/dev/null") == 2);
}
