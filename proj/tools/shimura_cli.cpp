// shimura: query genus, embedding and local-point data for X_0^D(N), and run
// the bielliptic / trigonal classifications.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shimura/shimura.hpp"

namespace {

using shimura::CurveLabel;
using shimura::Int;

struct Options {
  std::string fixtures;
  Int d = 0;
  Int n = 1;
  Int m = 0;
  Int disc = 0;
  Int conductor = 1;
  std::string subgroup;
  bool definite = false;
  std::optional<Int> exclude_p;
  std::string kind;
  bool squarefree_only = false;
  std::string format = "csv";
  std::string out;
};

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw shimura::DomainError("--subgroup: '" + item + "' is not an integer");
    }
  }
  return out;
}

shimura::FixtureSet fixtures(const Options& o) {
  return shimura::load_fixtures(o.fixtures.empty() ? std::nullopt
                                                   : std::optional<std::string>(o.fixtures));
}

void add_label(CLI::App* sub, Options& o) {
  sub->add_option("--d", o.d, "quaternion discriminant D")->required();
  sub->add_option("--n", o.n, "level N")->required();
}

// Output stream for --out; standard output when empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw shimura::DomainError("cannot open output file " + path);
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_classify(const Options& o) {
  const auto fx = fixtures(o);
  const auto fmt = shimura::parse_output_format(o.format);
  Sink sink(o.out);
  if (o.kind == "bielliptic") {
    shimura::write_rows(sink.get(), shimura::classify_bielliptic(fx).rows, fmt);
  } else {
    shimura::write_labels(sink.get(), shimura::classify_trigonal(fx), fmt);
  }
  return 0;
}

int dispatch(CLI::App& app, const Options& o) {
  const auto sub = app.get_subcommands().front()->get_name();
  std::ostream& os = std::cout;

  if (sub == "genus") {
    os << shimura::genus(CurveLabel(o.d, o.n)) << '\n';
  } else if (sub == "fixed-points") {
    os << shimura::fixed_point_count(CurveLabel(o.d, o.n), o.m) << '\n';
  } else if (sub == "quotient-genus") {
    const CurveLabel l(o.d, o.n);
    if (!o.subgroup.empty()) {
      const auto h = shimura::ALSubgroup::generated_by(l, parse_int_list(o.subgroup));
      os << shimura::subgroup_quotient_genus(h) << '\n';
    } else {
      os << shimura::quotient_genus(l, o.m) << '\n';
    }
  } else if (sub == "class-number") {
    const auto r = shimura::QuadOrder::from_discriminant(o.disc);
    os << shimura::class_number(r) << '\n';
  } else if (sub == "embed") {
    const CurveLabel l(o.d, o.n);
    const shimura::QuadOrder r(o.disc, o.conductor);
    if (o.definite) {
      shimura::detail::require(o.exclude_p.has_value(), "embed --definite needs --exclude-p");
      os << (shimura::order_embeds(r, shimura::EichlerTarget::definite_at(l, *o.exclude_p))
                 ? "yes"
                 : "no")
         << '\n';
    } else {
      os << shimura::global_embedding_number(r, l) << '\n';
    }
  } else if (sub == "local-points") {
    for (const auto& v : shimura::local_verdicts(CurveLabel(o.d, o.n), o.m))
      os << v.place_name() << ',' << shimura::to_string(v.status) << ',' << v.source << '\n';
  } else if (sub == "candidates") {
    std::vector<CurveLabel> labels;
    if (o.kind == "bielliptic") labels = shimura::bielliptic_candidates(fixtures(o));
    else labels = shimura::trigonal_candidates();
    for (const auto& l : labels)
      if (!o.squarefree_only || shimura::is_squarefree(l.N())) os << l.D() << ',' << l.N() << '\n';
  } else if (sub == "classify") {
    return run_classify(o);
  } else if (sub == "airr2") {
    for (const auto& l : shimura::airr2_report(fixtures(o)).all) os << l.D() << ',' << l.N() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic of Shimura curves X_0^D(N)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--fixtures", o.fixtures, "directory containing fixtures.txt");

  auto* g = app.add_subcommand("genus", "genus of X_0^D(N)");
  add_label(g, o);

  auto* fp = app.add_subcommand("fixed-points", "number of fixed points of w_m");
  add_label(fp, o);
  fp->add_option("--m", o.m, "Hall divisor m of DN")->required();

  auto* qg = app.add_subcommand("quotient-genus", "genus of X_0^D(N)/<w_m> or X_0^D(N)/H");
  add_label(qg, o);
  auto* qm = qg->add_option("--m", o.m, "Hall divisor m of DN");
  auto* qs = qg->add_option("--subgroup", o.subgroup, "generators m1,m2,... of H");
  qm->excludes(qs);
  qs->excludes(qm);
  qg->callback([qm, qs] {
    if (qm->count() == 0 && qs->count() == 0) throw CLI::ValidationError("need --m or --subgroup");
  });

  auto* cn = app.add_subcommand("class-number", "class number of the quadratic order of a discriminant");
  cn->add_option("--disc", o.disc, "discriminant")->required();

  auto* em = app.add_subcommand("embed", "optimal embedding number nu(R, O_N)");
  em->add_option("--disc", o.disc, "fundamental discriminant of R")->required();
  em->add_option("--conductor", o.conductor, "conductor of R");
  add_label(em, o);
  em->add_flag("--definite", o.definite, "use the definite algebra of discriminant D/p");
  em->add_option("--exclude-p", o.exclude_p, "prime p | D removed from the ramification");

  auto* lp = app.add_subcommand("local-points", "local verdicts for X_0^D(N)/<w_m>");
  add_label(lp, o);
  lp->add_option("--m", o.m, "Hall divisor m of DN")->required();

  const std::vector<std::string> kinds{"bielliptic", "trigonal"};
  auto* ca = app.add_subcommand("candidates", "candidate pairs D,N");
  ca->add_option("--kind", o.kind)->required()->check(CLI::IsMember(kinds));
  ca->add_flag("--squarefree-only", o.squarefree_only, "only squarefree N");

  auto* cl = app.add_subcommand("classify", "run a classification pipeline");
  cl->add_option("--kind", o.kind)->required()->check(CLI::IsMember(kinds));
  cl->add_option("--format", o.format, "csv, json or markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  cl->add_option("--out", o.out, "output path (default: standard output)");

  app.add_subcommand("airr2", "pairs with arithmetic degree of irrationality 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return 1;
  }

  try {
    return dispatch(app, o);
  } catch (const shimura::IntegralityError& e) {
    std::cerr << "integrality failure: " << e.what() << '\n';
    return 2;
  } catch (const shimura::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const shimura::FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << '\n';
    return 1;
  }
}
