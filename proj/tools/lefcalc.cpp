// lefcalc: exact-arithmetic calculus for Lefschetz fibrations given as
// monodromy factorizations.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 mathematical rejection.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "lefcalc/io.hpp"

using namespace lefcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitMath = 2;

LefschetzData load_builtin(const std::string& name, int genus) {
  if (name == "torus22") return torus22_model();
  if (name == "genus2-chain") return genus2_chain_model();
  if (name == "dl3") return dl3_model(genus);
  throw std::runtime_error("unknown builtin model '" + name +
                           "' (expected torus22, genus2-chain, or dl3)");
}

LefschetzData load_fibration(const std::string& path, bool builtin, int genus) {
  if (builtin) return load_builtin(path, genus);
  return fibration_from_json(parse_document(read_file(path)));
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

void print_report(const ValidationReport& r) {
  std::cout << "simplified: " << (r.simplified ? "yes" : "no") << "\n";
  for (const auto& f : r.failures) {
    std::cout << "  cycle " << f.index << ": " << f.reason << "\n";
  }
  if (r.closure_checked) {
    std::cout << "closure: " << (r.closure_identity ? "identity" : "defect")
              << "\n";
  }
  std::cout << "gompf_necessary: "
            << (r.gompf_necessary == GompfStatus::Satisfied
                    ? "satisfied (necessary-condition heuristic)"
                    : "unknown")
            << "\n";
}

void print_flexibility(const FlexibilityReport& r) {
  std::cout << "flexibility witness (" << r.caveat << "):\n";
  for (const auto& e : r.entries) {
    std::cout << "  p=" << e.prime << " order=" << e.result.order
              << " expected=" << e.expected_order << " "
              << (e.result.inconclusive
                      ? "inconclusive (BFS cap exceeded)"
                      : (e.result.full ? "full" : "not full"))
              << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact homological calculus for Lefschetz fibration "
               "monodromy factorizations"};
  app.require_subcommand(1);

  std::string path, out_path, target_name, model_name, dir_name;
  bool builtin = false;
  int genus = 2;
  unsigned prime = 2;
  std::size_t index = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "fibration file (or builtin name with --builtin)")
        ->required();
    cmd->add_flag("--builtin", builtin,
                  "treat path as a builtin model name (torus22, genus2-chain, dl3)");
    cmd->add_option("--genus", genus, "genus for the dl3 builtin");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a fibration file");
  add_input(validate_cmd);

  CLI::App* plan_cmd =
      app.add_subcommand("plan", "produce an embedding certificate");
  add_input(plan_cmd);
  plan_cmd->add_option("--target", target_name, "closed | weinstein")
      ->required()
      ->check(CLI::IsMember({"closed", "weinstein"}));
  plan_cmd->add_option("--out", out_path, "certificate output path");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-check a certificate file");
  verify_cmd->add_option("path", path, "certificate file")->required();

  CLI::App* models_cmd =
      app.add_subcommand("models", "write a builtin fibration file");
  models_cmd->add_option("name", model_name, "torus22 | genus2-chain | dl3")
      ->required();
  models_cmd->add_option("--genus", genus, "genus for dl3");
  models_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* spcheck_cmd = app.add_subcommand(
      "spcheck", "mod-p generation witness for the target of a fibration");
  add_input(spcheck_cmd);
  spcheck_cmd->add_option("--prime", prime, "prime modulus (default 2)");

  CLI::App* hurwitz_cmd =
      app.add_subcommand("hurwitz", "apply one Hurwitz move");
  add_input(hurwitz_cmd);
  hurwitz_cmd->add_option("--index", index, "move position")->required();
  hurwitz_cmd->add_option("--dir", dir_name, "left | right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  hurwitz_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (validate_cmd->parsed()) {
    LefschetzData lf = load_fibration(path, builtin, genus);
    ValidationReport r = validate(lf);
    print_report(r);
    bool ok = r.simplified && (!r.closure_checked || r.closure_identity);
    return ok ? kExitOk : kExitMath;
  }

  if (plan_cmd->parsed()) {
    LefschetzData lf = load_fibration(path, builtin, genus);
    EmbeddingCertificate cert = target_name == "closed"
                                    ? plan_closed_embedding(lf)
                                    : plan_weinstein_embedding(lf);
    if (cert.genus_warning) {
      std::cerr << "warning: genus 2 fiber; the existence result guarantees "
                   "genus >= 3\n";
    }
    emit(out_path, dump_document(certificate_to_json(cert)));
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    EmbeddingCertificate cert =
        certificate_from_json(parse_document(read_file(path)));
    std::string why;
    if (!verify_certificate(cert, &why)) {
      std::cerr << "verification failed: " << why << "\n";
      return kExitMath;
    }
    std::cout << "certificate ok: " << cert.entries.size() << " entries\n";
    return kExitOk;
  }

  if (models_cmd->parsed()) {
    LefschetzData lf = load_builtin(model_name, genus);
    emit(out_path, dump_document(fibration_to_json(lf)));
    return kExitOk;
  }

  if (spcheck_cmd->parsed()) {
    LefschetzData lf = load_fibration(path, builtin, genus);
    TargetModel target = lf.base == Base::Sphere
                             ? closed_pencil_target(lf.fiber.genus)
                             : weinstein_dl3_target(lf.fiber.genus);
    FlexibilityReport r = flexibility_witness(target, {prime});
    print_flexibility(r);
    return (r.all_full && !r.any_inconclusive) ? kExitOk : kExitMath;
  }

  if (hurwitz_cmd->parsed()) {
    LefschetzData lf = load_fibration(path, builtin, genus);
    HurwitzDir dir = dir_name == "left" ? HurwitzDir::Left : HurwitzDir::Right;
    LefschetzData moved = hurwitz_move(lf, index, dir);
    emit(out_path, dump_document(fibration_to_json(moved)));
    return kExitOk;
  }

  return kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MathError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
