#include "caliber/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "caliber/calib/comass.hpp"
#include "caliber/calib/semicalibration.hpp"
#include "caliber/cli/registry.hpp"
#include "caliber/cli/suites.hpp"
#include "caliber/errors.hpp"
#include "caliber/model/link_frame.hpp"
#include "caliber/model/twistor.hpp"
#include "caliber/planes/classify.hpp"
#include "caliber/planes/normal_form.hpp"

namespace caliber {

namespace {

using json = nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

Space require_space(const std::string& s) {
  auto sp = parse_space(s);
  if (!sp) throw InvalidArgument("unknown space '" + s + "' (cone, link or twistor)");
  return *sp;
}

std::optional<Space> optional_space(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return require_space(s);
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

struct Options {
  bool pretty = false;
  bool no_timing = false;
  int n = 1;
  std::string space;
  std::string form;
  std::string plane;
  int k = 0;
  int restarts = 200;
  std::uint64_t seed = 0;
  double tol = -1;
  bool explore_envelope = false;
  std::string suite;
  int samples = 10000;
};

int cmd_forms_list(const Options& o, std::ostream& out) {
  emit(out, forms_catalog(require_space(o.space.empty() ? "cone" : o.space), o.n), o.pretty);
  return 0;
}

int cmd_forms_dump(const Options& o, std::ostream& out) {
  const NamedForm f = resolve_form(o.form, o.n, optional_space(o.space));
  json j = {{"name", f.name}, {"space", space_name(f.space)}, {"n", f.n}, {"description", f.description}};
  j["form"] = f.complex ? to_json(f.form) : to_json(f.form.re);
  emit(out, j, o.pretty);
  return 0;
}

int cmd_comass(const Options& o, std::ostream& out) {
  AltForm f;
  json head;
  std::optional<Space> space;
  const bool is_file = o.form.size() > 5 && (o.form.ends_with(".json") || std::filesystem::exists(o.form));
  if (is_file) {
    const CAltForm c = complex_form_from_json(read_json_file(o.form));
    if (!c.im.is_zero()) throw InvalidArgument("comass needs a real form; the file has an imaginary part");
    f = c.re;
    head = {{"form", o.form}};
  } else {
    const NamedForm nf = resolve_form(o.form, o.n, optional_space(o.space));
    if (nf.complex) throw InvalidArgument("'" + nf.name + "' is complex; use its re_ or im_ part");
    f = nf.form.re;
    space = nf.space;
    head = {{"form", nf.name}, {"space", space_name(nf.space)}, {"n", nf.n}};
  }
  const int k = o.k > 0 ? o.k : f.degree();
  if (k != f.degree()) throw InvalidArgument("--k must equal the form degree " + std::to_string(f.degree()));
  ComassParams p;
  p.restarts = o.restarts;
  p.seed = o.seed;
  if (o.tol > 0) p.tol = o.tol;
  const ComassResult r = comass_search(f, k, p);
  json j = head;
  j["k"] = k;
  j["restarts"] = p.restarts;
  j["seed"] = p.seed;
  j["tol"] = p.tol;
  j["value"] = r.value;
  j["argmax"] = r.argmax.to_json();
  j["restarts_used"] = r.restarts_used;
  j["converged_fraction"] = r.converged_fraction;
  j["maximizer_count"] = r.maximizers.size();
  if (o.explore_envelope) {
    if (space != Space::cone) throw InvalidArgument("--explore-envelope needs a named cone form");
    const HKModel hk = HKModel::build(o.n);
    const EnvelopeReport env = explore_envelope(r.maximizers, hk.I(1), hk.I(2), hk.I(3));
    std::map<int, int> histogram;
    for (int d : env.envelope_dims) ++histogram[d];
    json h = json::object();
    for (const auto& [d, c] : histogram) h[std::to_string(d)] = c;
    j["envelope"] = {{"plane_degree", env.plane_degree}, {"dimension_counts", h}};
  }
  emit(out, j, o.pretty);
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Space sp = require_space(o.space);
  const Plane P = Plane::from_json(read_json_file(o.plane));
  const double tol = o.tol > 0 ? o.tol : 1e-8;
  const std::string id = std::filesystem::path(o.plane).stem().string();
  ClassificationReport r = [&] {
    switch (sp) {
      case Space::cone: return classify_plane(P, HKModel::build(o.n), tol, id);
      case Space::link: return classify_plane(P, LinkFrame(o.n), tol, id);
      default: return classify_plane(P, TwistorModel::build(o.n), tol, id);
    }
  }();
  emit(out, r.to_json(), o.pretty);
  return 0;
}

int cmd_normalform(const Options& o, std::ostream& out) {
  const Plane P = Plane::from_json(read_json_file(o.plane));
  const TwistorModel T = TwistorModel::build(o.n);
  const double tol = o.tol > 0 ? o.tol : 1e-8;
  json j = normal_form_theta(P, T, tol).to_json();
  emit(out, j, o.pretty);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.n = o.n;
  so.seed = o.seed;
  so.restarts = o.restarts;
  so.samples = o.samples;
  const SuiteReport rep = run_suite(o.suite, so);
  if (o.pretty)
    out << rep.to_text(!o.no_timing);
  else
    out << rep.to_json(!o.no_timing).dump() << "\n";
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Calibration forms on flat hyperkahler, 3-Sasakian and twistor models", "caliber"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "human-readable output");
  app.add_flag("--no-timing", o.no_timing, "omit timing fields");

  auto* forms = app.add_subcommand("forms", "form catalog");
  forms->require_subcommand(1);
  forms->fallthrough();
  auto* list = forms->add_subcommand("list", "list the catalog with term counts");
  list->add_option("--space", o.space, "cone, link or twistor")->default_str("cone");
  list->add_option("--n", o.n, "quaternionic dimension");
  list->fallthrough();
  auto* dump = forms->add_subcommand("dump", "emit one form as JSON");
  dump->add_option("--name,--form", o.form, "registry name")->required();
  dump->add_option("--space", o.space, "restrict the lookup to one space");
  dump->add_option("--n", o.n, "quaternionic dimension");
  dump->fallthrough();

  auto* comass = app.add_subcommand("comass", "multi-start comass search");
  comass->add_option("--form", o.form, "registry name or form JSON file")->required();
  comass->add_option("--k", o.k, "plane degree (defaults to the form degree)");
  comass->add_option("--n", o.n, "quaternionic dimension");
  comass->add_option("--space", o.space, "restrict the lookup to one space");
  comass->add_option("--restarts", o.restarts, "number of restarts");
  comass->add_option("--seed", o.seed, "base seed");
  comass->add_option("--tol", o.tol, "gradient tolerance of the ascent");
  comass->add_flag("--explore-envelope", o.explore_envelope, "report quaternionic envelopes of the maximizers");
  comass->fallthrough();

  auto* classify = app.add_subcommand("classify", "classify a plane");
  classify->add_option("--space", o.space, "cone, link or twistor")->required();
  classify->add_option("--n", o.n, "quaternionic dimension");
  classify->add_option("--plane", o.plane, "plane JSON file")->required();
  classify->add_option("--tol", o.tol, "classification tolerance");
  classify->fallthrough();

  auto* normalform = app.add_subcommand("normalform", "normal form of a Re(gamma0)-calibrated 3-plane");
  normalform->add_option("--n", o.n, "quaternionic dimension");
  normalform->add_option("--plane", o.plane, "plane JSON file")->required();
  normalform->add_option("--tol", o.tol, "tolerance");
  normalform->fallthrough();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "identities, cones, calibrations, propositions or normalform")->required();
  verify->add_option("--n", o.n, "quaternionic dimension");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--restarts", o.restarts, "comass restarts");
  verify->add_option("--samples", o.samples, "samples per proposition scan");
  verify->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = &app;
    for (const CLI::App* s = &app; s;) {
      auto subs = s->get_subcommands();
      if (subs.empty()) break;
      s = sub = subs.front();
    }
    out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*list) return cmd_forms_list(o, out);
    if (*dump) return cmd_forms_dump(o, out);
    if (*comass) return cmd_comass(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*normalform) return cmd_normalform(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace caliber
