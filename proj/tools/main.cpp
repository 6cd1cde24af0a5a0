#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "openbook/cone.hpp"
#include "openbook/errors.hpp"
#include "openbook/graph.hpp"
#include "openbook/invariants.hpp"
#include "openbook/json_io.hpp"
#include "openbook/verify.hpp"

namespace {

// Exit codes: 0 success, 1 mathematical failure (invalid graph, failed
// verification, inapplicable cycle), 2 usage or parse error.
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

// Graph invariant violations detected after parsing; carries the diagnosis.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw openbook::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

openbook::PlumbingGraph load_graph(const std::string& path) {
  return openbook::parse_graph(read_file(path));
}

std::string definiteness_diagnosis(const openbook::DefinitenessCheck& d) {
  return "leading principal minor of order " + std::to_string(d.failing_order) +
         " of the negated intersection matrix is " + d.failing_minor.str();
}

openbook::PlumbingGraph load_validated(const std::string& path) {
  openbook::PlumbingGraph g = load_graph(path);
  openbook::GraphValidation v = openbook::validate_graph(g);
  if (!v.tree) throw MathError("graph is not a tree (must be connected and acyclic)");
  if (!v.definiteness.negative_definite)
    throw MathError("intersection form is not negative definite: " +
                    definiteness_diagnosis(v.definiteness));
  return g;
}

std::string vertex_vector_literal(const openbook::PlumbingGraph& g,
                                  const std::vector<openbook::Int>& values) {
  std::string out;
  for (int i = 0; i < g.size(); ++i) {
    if (i) out += ",";
    out += g.name(i) + "=" + values[i].str();
  }
  return out;
}

int cmd_validate(const std::string& path, bool json) {
  openbook::PlumbingGraph g = load_graph(path);
  openbook::GraphValidation v = openbook::validate_graph(g);
  if (json) {
    std::cout << openbook::validation_json(v) << "\n";
  } else {
    std::cout << "tree: " << yn(v.tree) << ", negative definite: "
              << yn(v.definiteness.negative_definite);
    if (!v.definiteness.negative_definite)
      std::cout << " (" << definiteness_diagnosis(v.definiteness) << ")";
    std::cout << "\n";
  }
  return v.ok() ? 0 : kExitMath;
}

int cmd_zmin(const std::string& path, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::Cycle zmin = openbook::compute_zmin(g);
  if (json)
    std::cout << openbook::zmin_json(zmin) << "\n";
  else
    std::cout << openbook::to_literal(zmin) << "\n";
  return 0;
}

int cmd_canonical(const std::string& path, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::RationalCycle k = openbook::canonical_cycle(g);
  if (json)
    std::cout << openbook::canonical_json(k) << "\n";
  else
    std::cout << openbook::to_literal(k) << "\n";
  return 0;
}

int cmd_chi(const std::string& path, const std::string& literal, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::Cycle d = openbook::parse_cycle_literal(g, literal);
  openbook::Int chi = openbook::euler_char(d);
  if (json)
    std::cout << openbook::chi_json(d, chi) << "\n";
  else
    std::cout << chi.str() << "\n";
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& literal, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::Cycle z = openbook::parse_cycle_literal(g, literal);
  openbook::OpenBookReport r = openbook::open_book_report(z);
  if (json) {
    std::cout << openbook::open_book_json(r) << "\n";
  } else {
    std::cout << "cycle: " << openbook::to_literal(r.cycle) << "\n"
              << "antinef: " << yn(r.antinef) << "\n"
              << "beta: " << r.beta.str() << "\n"
              << "genus: " << r.genus.str() << "\n"
              << "milnor: " << r.milnor.str() << "\n"
              << "chi_minus: " << r.chi_minus.str() << "\n"
              << "binding_vector: " << vertex_vector_literal(g, r.binding) << "\n";
  }
  return 0;
}

int cmd_contact(const std::string& path, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::ContactReport r = openbook::contact_invariants(g);
  if (json) {
    std::cout << openbook::contact_json(r) << "\n";
  } else {
    std::cout << "sg: " << r.sg.str() << "\n"
              << "bn: " << r.bn.str() << "\n"
              << "norm: " << r.norm.str() << "\n"
              << "rational: " << yn(r.rational) << "\n"
              << "minimal: " << yn(r.minimal) << "\n"
              << "zmin: " << openbook::to_literal(r.zmin) << "\n";
  }
  return 0;
}

int cmd_cone(const std::string& path, int bound, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::ConeEnumeration e = openbook::enumerate_cone(g, bound);
  if (json) {
    std::cout << openbook::enumeration_json(e) << "\n";
  } else {
    for (const openbook::Cycle& d : e.elements) std::cout << openbook::to_literal(d) << "\n";
  }
  return 0;
}

int cmd_stratum(const std::string& path, int bound, long long genus, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  std::vector<openbook::Cycle> elements = openbook::genus_stratum(g, bound, genus);
  if (json) {
    std::cout << openbook::stratum_json(bound, genus, elements) << "\n";
  } else {
    std::cout << "stratum g=" << genus << " within bound " << bound << ": " << elements.size()
              << " element(s)\n";
    for (const openbook::Cycle& d : elements) std::cout << openbook::to_literal(d) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, int bound, bool force, bool json) {
  openbook::PlumbingGraph g = load_validated(path);
  openbook::Int estimate = openbook::estimated_instances(g, bound);
  if (!force && estimate > 10'000'000)
    throw std::invalid_argument("estimated " + estimate.str() +
                                " instances exceeds 10000000; rerun with --force to proceed");
  openbook::VerificationReport rep = openbook::run_suite(g, bound, path);
  if (json) {
    std::cout << openbook::verification_json(rep) << "\n";
  } else {
    int passed = 0;
    for (const openbook::PropertyRecord& p : rep.properties) {
      if (p.ok) {
        ++passed;
        std::cout << "ok   " << p.name << " (" << p.instances << " instances)\n";
      } else {
        const openbook::Counterexample& ce = *p.counterexample;
        std::cout << "FAIL " << p.name << " (" << p.instances << " instances): " << ce.relation
                  << "; lhs = " << ce.lhs << ", rhs = " << ce.rhs << "; at";
        for (const openbook::Cycle& c : ce.cycles) std::cout << " " << openbook::to_literal(c);
        std::cout << "\n";
      }
    }
    std::cout << "verified " << rep.graph << ": " << passed << "/" << rep.properties.size()
              << " properties passed (bound " << rep.bound << ", " << rep.seconds << " s)\n";
  }
  return rep.all_ok() ? 0 : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor open book and contact invariants of negative-definite plumbing trees"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit one JSON document instead of human-readable text");

  std::string path, literal;
  int bound = 0;
  long long genus = 0;
  bool force = false;

  CLI::App* validate = app.add_subcommand("validate", "check the tree and definiteness invariants");
  validate->add_option("file", path, "graph file")->required();

  CLI::App* zmin = app.add_subcommand("zmin", "fundamental cycle (minimal nonzero anti-nef)");
  zmin->add_option("file", path, "graph file")->required();

  CLI::App* canonical = app.add_subcommand("canonical", "canonical cycle K, exact rational");
  canonical->add_option("file", path, "graph file")->required();

  CLI::App* chi = app.add_subcommand("chi", "Euler characteristic chi(D) = -(D, D+K)/2");
  chi->add_option("file", path, "graph file")->required();
  chi->add_option("--cycle", literal, "cycle literal, e.g. a=1,b=2")->required();

  CLI::App* invariants = app.add_subcommand("invariants", "open book invariants of an anti-nef cycle");
  invariants->add_option("file", path, "graph file")->required();
  invariants->add_option("--cycle", literal, "cycle literal, e.g. a=1,b=2")->required();

  CLI::App* contact = app.add_subcommand("contact", "canonical contact structure invariants");
  contact->add_option("file", path, "graph file")->required();

  CLI::App* cone = app.add_subcommand("cone", "anti-nef cycles with coefficients in [0, bound]");
  cone->add_option("file", path, "graph file")->required();
  cone->add_option("--bound", bound, "coefficient cap")->required();

  CLI::App* stratum = app.add_subcommand("stratum", "bounded genus stratum of the anti-nef cone");
  stratum->add_option("file", path, "graph file")->required();
  stratum->add_option("--bound", bound, "coefficient cap")->required();
  stratum->add_option("--genus", genus, "page genus value")->required();

  CLI::App* verify = app.add_subcommand("verify", "exhaustive bounded check of every invariant property");
  verify->add_option("file", path, "graph file")->required();
  verify->add_option("--bound", bound, "coefficient cap")->required();
  verify->add_flag("--force", force, "run even above the instance guard");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(path, json);
    if (app.got_subcommand(zmin)) return cmd_zmin(path, json);
    if (app.got_subcommand(canonical)) return cmd_canonical(path, json);
    if (app.got_subcommand(chi)) return cmd_chi(path, literal, json);
    if (app.got_subcommand(invariants)) return cmd_invariants(path, literal, json);
    if (app.got_subcommand(contact)) return cmd_contact(path, json);
    if (app.got_subcommand(cone)) return cmd_cone(path, bound, json);
    if (app.got_subcommand(stratum)) return cmd_stratum(path, bound, genus, json);
    if (app.got_subcommand(verify)) return cmd_verify(path, bound, force, json);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const openbook::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const openbook::NotAntiNefError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const openbook::NotEffectiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMath;
  }
}
