// centra: canonical forms and centralizers over exact fields.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "centra/canonical_forms.hpp"
#include "centra/centralizer.hpp"
#include "centra/commutant_oracle.hpp"
#include "centra/fields.hpp"
#include "centra/text_io.hpp"
#include "centra/verify.hpp"

namespace {

using namespace centra;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Task {
  std::string field = "gf:2";
  std::string poly = "x";
  std::string alpha;
  std::string kind = "e";
  std::string form = "jordan";
  std::string input;
  bool json = false;
  bool oracle = false;
  bool assume_irreducible = false;
  bool recursive = false;
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  std::optional<std::size_t> max_n;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t oracle_cap(const Task& task) { return task.max_n ? *task.max_n : oracle_max_n_from_env(); }

FormKind parse_kind(const std::string& text) {
  if (text == "e") return FormKind::EKind;
  if (text == "first") return FormKind::FirstKind;
  throw UsageError("--kind must be 'e' or 'first', got '" + text + "'");
}

template <ExactField F>
CanonicalSpec<F> spec_from(const F& field, const Task& task) {
  if (task.alpha.empty()) throw UsageError("--alpha is required");
  return make_spec(parse_poly(field, task.poly), parse_partition(task.alpha), parse_kind(task.kind),
                   task.assume_irreducible);
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("an input matrix file is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

AnyMatrix load_matrix(const std::string& path) {
  const auto text = read_input(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    return matrix_from_json(j);
  }
  return matrix_from_text(text);
}

template <ExactField F>
Matrix<F> load_matrix_as(const std::string& path, const F& field) {
  auto any = load_matrix(path);
  if (auto* m = std::get_if<Matrix<F>>(&any); m != nullptr && m->field() == field) return std::move(*m);
  fail(ErrorCode::FieldMismatch, "input matrix is not over " + field.selector());
}

template <ExactField F>
void print_matrix(const Matrix<F>& m, bool json) {
  if (json)
    std::cout << matrix_to_json(m).dump() << '\n';
  else
    write_matrix_text(std::cout, m);
}

template <ExactField F>
int cmd_form(const F& field, const Task& task, bool weyr) {
  const auto spec = spec_from(field, task);
  print_matrix(weyr ? weyr_form(spec) : gj_form(spec), task.json);
  return kExitOk;
}

template <ExactField F>
int cmd_permutation(const F& field, const Task& task) {
  const auto spec = spec_from(field, task);
  const auto levels = weyr_levels(spec.segre);
  if (task.json) {
    const auto perm = weyr_permutation(spec);
    nlohmann::json order = nlohmann::json::array();
    for (auto o : perm.order) order.push_back(o + 1);
    std::cout << nlohmann::json{{"block_size", spec.s()}, {"levels", levels}, {"order", order}}.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (l) std::cout << " | ";
    for (std::size_t k = 0; k < levels[l].size(); ++k) std::cout << (k ? " " : "") << levels[l][k];
  }
  std::cout << '\n';
  return kExitOk;
}

template <ExactField F>
int cmd_centralizer(const F& field, const Task& task) {
  const auto spec = spec_from(field, task);
  CentralizerBasis<F> basis;
  if (task.form == "jordan") {
    if (task.recursive) throw UsageError("--recursive applies to --form weyr only");
    basis = zg_basis(spec);
  } else if (task.form == "weyr") {
    basis = task.recursive ? zw_basis_recursive(spec) : zw_basis(spec);
  } else {
    throw UsageError("--form must be 'jordan' or 'weyr', got '" + task.form + "'");
  }
  if (task.json)
    std::cout << basis_to_json(basis).dump() << '\n';
  else
    write_basis_text(std::cout, basis);
  return kExitOk;
}

template <ExactField F>
int cmd_dim(const F& field, const Task& task) {
  const auto spec = spec_from(field, task);
  const auto both = centralizer_dim_formulas(spec.segre.alpha, spec.s());
  std::optional<std::size_t> oracle;
  if (task.oracle) oracle = commutant_dim(gj_form(spec), {oracle_cap(task), Execution::Parallel});
  if (task.json) {
    nlohmann::json j{{"segre", both.segre}, {"weyr", both.weyr}};
    if (oracle) j["oracle"] = *oracle;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "segre: " << both.segre << "\nweyr: " << both.weyr << '\n';
    if (oracle) std::cout << "oracle: " << *oracle << '\n';
  }
  if (both.segre != both.weyr) {
    std::cerr << "centra: mismatch: segre formula " << both.segre << " != weyr formula " << both.weyr << '\n';
    return kExitVerifyFailed;
  }
  if (oracle && *oracle != both.segre) {
    std::cerr << "centra: mismatch: oracle " << *oracle << " != formula " << both.segre << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

template <ExactField F>
int cmd_det(const F& field, const Task& task) {
  const auto spec = spec_from(field, task);
  const auto k = load_matrix_as(task.input, field);
  if (!commutator(weyr_form(spec), k).is_zero()) fail(ErrorCode::NotInCentralizer, "K does not commute with W");
  const auto product = zw_determinant(k, spec);
  const auto grouped = zw_grouped_determinant(k, spec);
  const auto direct = determinant(k);
  if (task.json) {
    std::cout << nlohmann::json{{"product", field.format(product)},
                                {"grouped", field.format(grouped)},
                                {"direct", field.format(direct)},
                                {"automorphism", !direct.is_zero()}}
                     .dump()
              << '\n';
  } else {
    std::cout << "product: " << field.format(product) << "\ngrouped: " << field.format(grouped)
              << "\ndirect: " << field.format(direct) << "\nautomorphism: " << (direct.is_zero() ? "no" : "yes")
              << '\n';
  }
  if (product != direct || grouped != direct) {
    std::cerr << "centra: mismatch: product " << field.format(product) << ", grouped " << field.format(grouped)
              << ", direct " << field.format(direct) << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

template <ExactField F>
int cmd_verify(const F& field, const Task& task) {
  const auto spec = spec_from(field, task);
  const auto report = verify_spec(spec, {task.seed, task.samples, oracle_cap(task)});
  if (task.json) {
    std::cout << report_to_json(report).dump() << '\n';
  } else {
    std::cout << "seed: " << report.seed << '\n';
    for (const auto& c : report.checks) std::cout << to_string(c.status) << ' ' << c.name << ": " << c.detail << '\n';
    std::cout << "result: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  if (const auto* bad = report.first_failure()) {
    std::cerr << "centra: first failure: " << bad->name << ": " << bad->detail << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

template <ExactField F>
int cmd_oracle(const Matrix<F>& a, const Task& task) {
  const auto basis = commutant_basis(a, {oracle_cap(task), Execution::Parallel});
  for (const auto& x : basis)
    if (!commutes(a, x)) {
      std::cerr << "centra: oracle produced a non-commuting element\n";
      return kExitVerifyFailed;
    }
  if (task.json) {
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& x : basis) mats.push_back(matrix_to_json(x));
    std::cout << nlohmann::json{{"dim", basis.size()}, {"basis", std::move(mats)}}.dump() << '\n';
  } else {
    std::cout << "dim=" << basis.size() << '\n';
    for (const auto& x : basis) write_matrix_text(std::cout, x);
  }
  return kExitOk;
}

int dispatch(const std::string& command, const Task& task) {
  if (command == "oracle")
    return std::visit([&](const auto& m) { return cmd_oracle(m, task); }, load_matrix(task.input));
  const AnyField field = parse_field_selector(task.field);
  return std::visit(
      [&](const auto& f) -> int {
        if (command == "jordan") return cmd_form(f, task, false);
        if (command == "weyr") return cmd_form(f, task, true);
        if (command == "permutation") return cmd_permutation(f, task);
        if (command == "centralizer") return cmd_centralizer(f, task);
        if (command == "dim") return cmd_dim(f, task);
        if (command == "det") return cmd_det(f, task);
        return cmd_verify(f, task);
      },
      field);
}

void add_spec_options(CLI::App* sub, Task& task) {
  sub->add_option("--field", task.field, "gf:<p>, q, or gft:<p>")->capture_default_str();
  sub->add_option("--poly", task.poly, "monic irreducible polynomial in x")->capture_default_str();
  sub->add_option("--alpha", task.alpha, "Segre characteristic, e.g. 5,4,3,1,1")->required();
  sub->add_option("--kind", task.kind, "coupling block: e or first")->capture_default_str();
  sub->add_flag("--assume-irreducible", task.assume_irreducible, "trust --poly to be irreducible over q or gft");
  sub->add_flag("--json", task.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centra: generalized Jordan/Weyr forms and their centralizers over exact fields"};
  app.require_subcommand(1);
  Task task;

  auto* jordan = app.add_subcommand("jordan", "print the generalized Jordan matrix G");
  auto* weyr = app.add_subcommand("weyr", "print the generalized Weyr matrix W");
  auto* permutation = app.add_subcommand("permutation", "print the block ordering taking G to W");
  auto* centralizer = app.add_subcommand("centralizer", "stream a basis of Z(G) or Z(W)");
  auto* dim = app.add_subcommand("dim", "centralizer dimension from both closed forms");
  auto* det = app.add_subcommand("det", "determinant of K in Z(W), product formula and direct");
  auto* verify = app.add_subcommand("verify", "run the invariant suite for one spec");
  auto* oracle = app.add_subcommand("oracle", "commutant basis of an arbitrary square matrix");

  for (auto* sub : {jordan, weyr, permutation, centralizer, dim, det, verify}) add_spec_options(sub, task);
  centralizer->add_option("--form", task.form, "jordan or weyr")->capture_default_str();
  centralizer->add_flag("--recursive", task.recursive, "build Z(W) by the level recursion");
  dim->add_flag("--oracle", task.oracle, "also compute the nullity of the commutation operator");
  for (auto* sub : {dim, verify, oracle})
    sub->add_option("--max-n", task.max_n, "oracle size cap (default: CENTRA_MAX_N or 40)")->check(CLI::PositiveNumber);
  det->add_option("input", task.input, "matrix file (text or JSON), - for stdin")->required();
  oracle->add_option("input", task.input, "matrix file (text or JSON), - for stdin")->required();
  oracle->add_flag("--json", task.json, "JSON output");
  verify->add_option("--seed", task.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--samples", task.samples, "sampled elements for the determinant check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "centra: usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), task);
  } catch (const UsageError& e) {
    std::cerr << "centra: usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "centra: error: " << e.what() << '\n';
  }
  return kExitUsage;
}
