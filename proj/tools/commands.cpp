#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signdec/errors.hpp"
#include "signdec/sign_decomposition.hpp"

namespace signdec::cli {

namespace {

std::optional<ValuedQuiver> load_quiver(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_quiver(text.str());
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

std::string braces(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

template <typename Vec>
std::string tuple(const Vec& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

}  // namespace

int cmd_finite(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto q = load_quiver(path, err);
  if (!q) return kInputError;
  if (const auto witness = find_infinite_witness(*q)) {
    out << "infinite eps=" << witness->eps.to_string() << " component=" << braces(witness->component.vertices)
        << " type=" << witness->component.type.name() << '\n';
  } else {
    out << "finite\n";
  }
  return kOk;
}

int cmd_count(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto q = load_quiver(path, err);
  if (!q) return kInputError;
  out << count_stau(*q).to_string() << '\n';
  return kOk;
}

int cmd_signdec(const std::string& path, bool per_epsilon, std::ostream& out, std::ostream& err) {
  const auto q = load_quiver(path, err);
  if (!q) return kInputError;
  Count total = 0;
  std::uint64_t slices = 0;
  for (const SignVector& e : enumerate_signs(q->size())) {
    const SliceSummary s = describe_slice(*q, e);
    total += s.count;
    ++slices;
    if (!per_epsilon) continue;
    out << s.eps.to_string() << "  [";
    for (std::size_t i = 0; i < s.components.size(); ++i) {
      if (i > 0) out << ' ';
      out << s.components[i].type.name() << braces(s.components[i].vertices);
    }
    out << "]  count=" << s.count.to_string() << "  two-term-tilting=" << (s.two_term_tilting ? "yes" : "no")
        << '\n';
  }
  out << "slices=" << slices << " total=" << total.to_string() << '\n';
  return kOk;
}

std::string hasse_to_dot(const GluedHasse& h) {
  std::ostringstream out;
  out << "digraph stau {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const StauNode& node = h.nodes[i];
    out << "  n" << i << " [label=\"eps=" << node.eps.to_string() << "\\ng=" << tuple(node.g) << "\"];\n";
  }
  for (const HasseArrow& a : h.arrows) {
    out << "  n" << a.from << " -> n" << a.to
        << (a.kind == ArrowKind::Internal ? " [style=solid];\n" : " [style=dashed];\n");
  }
  out << "}\n";
  return out.str();
}

std::string hasse_to_json(const GluedHasse& h) {
  using nlohmann::ordered_json;
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const StauNode& node = h.nodes[i];
    ordered_json supports = ordered_json::array();
    for (const IntervalModule& m : node.tilt.summands) supports.push_back(m.support);
    nodes.push_back({{"id", i}, {"eps", node.eps.values()}, {"summand_supports", supports}, {"g", node.g}});
  }
  ordered_json arrows = ordered_json::array();
  for (const HasseArrow& a : h.arrows) {
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"kind", std::string(to_string(a.kind))}});
  }
  ordered_json doc;
  doc["nodes"] = std::move(nodes);
  doc["arrows"] = std::move(arrows);
  return doc.dump() + "\n";
}

int cmd_hasse(const std::string& path, HasseFormat format, std::ostream& out, std::ostream& err) {
  const auto q = load_quiver(path, err);
  if (!q) return kInputError;
  GluedHasse h;
  try {
    h = glued_hasse(*q);
  } catch (const UnsupportedComponent& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  }
  out << (format == HasseFormat::Dot ? hasse_to_dot(h) : hasse_to_json(h));
  return kOk;
}

int cmd_brauer(BrauerKind kind, int n, BrauerAction action, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: n must be positive\n";
    return kInputError;
  }
  const bool line = kind == BrauerKind::Line;
  if (action == BrauerAction::EmitQuiver) {
    out << "# Brauer " << (line ? "line" : "cycle") << " algebra with " << n
        << " edges, radical-square-zero quotient\n";
    out << "n " << n << '\n';
    for (const RawArrow& a : line ? brauer_line_arrows(n) : brauer_cycle_arrows(n)) {
      out << "a " << a.src << ' ' << a.tgt << '\n';
    }
    return kOk;
  }

  const Count got = count_stau(line ? brauer_line_rsz(n) : brauer_cycle_rsz(n));
  if (!line && n % 2 == 0) {
    if (got.is_infinite()) {
      out << "infinite (expected: not tau-tilting-finite)\n";
      return kOk;
    }
    out << "MISMATCH " << got.to_string() << " infinite\n";
    return kVerificationFailed;
  }
  const BigCount want = line ? line_count(n) : cycle_count(n);
  if (got == Count(want)) {
    out << "OK " << want.str() << '\n';
    return kOk;
  }
  out << "MISMATCH " << got.to_string() << ' ' << want.str() << '\n';
  return kVerificationFailed;
}

int run_identities(const CompositionSum& table, std::ostream& out) {
  auto checks = verify_identities(table);
  const auto catalan_checks = verify_catalan_identities(table.n_max);
  checks.insert(checks.end(), catalan_checks.begin(), catalan_checks.end());
  int failures = 0;
  for (const IdentityCheck& c : checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name << " n=" << c.n << "  " << c.lhs << (c.ok ? " == " : " != ")
        << c.rhs << '\n';
    failures += c.ok ? 0 : 1;
  }
  if (failures == 0) {
    out << "all " << checks.size() << " checks passed\n";
    return kOk;
  }
  out << failures << " of " << checks.size() << " checks failed\n";
  return kVerificationFailed;
}

int cmd_identities(int max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 1) {
    err << "error: --max-n must be positive\n";
    return kInputError;
  }
  return run_identities(composition_sums(max_n), out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-decomposition of support tau-tilting modules over radical-square-zero algebras",
               "stautilt"};
  app.require_subcommand(1);

  std::string path;
  bool per_epsilon = false;
  std::string format = "dot";
  std::string brauer_kind;
  int brauer_n = 0;
  bool emit_quiver = false;
  bool verify = false;
  int max_n = 12;

  auto* finite = app.add_subcommand("finite", "Decide tau-tilting-finiteness");
  finite->add_option("path", path, "Quiver file")->required();
  auto* count = app.add_subcommand("count", "Count support tau-tilting modules");
  count->add_option("path", path, "Quiver file")->required();
  auto* signdec = app.add_subcommand("signdec", "Per-slice Dynkin types and counts");
  signdec->add_option("path", path, "Quiver file")->required();
  signdec->add_flag("--per-epsilon", per_epsilon, "One row per sign vector");
  auto* hasse = app.add_subcommand("hasse", "Glued Hasse quiver");
  hasse->add_option("path", path, "Quiver file")->required();
  hasse->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}));
  auto* brauer = app.add_subcommand("brauer", "Brauer line/cycle generators and closed forms");
  brauer->add_option("kind", brauer_kind, "line or cycle")->required()->check(CLI::IsMember({"line", "cycle"}));
  brauer->add_option("n", brauer_n, "Number of edges")->required();
  auto* emit_flag = brauer->add_flag("--emit-quiver", emit_quiver, "Write the quiver file");
  auto* verify_flag = brauer->add_flag("--verify", verify, "Compare the count with the closed formula");
  emit_flag->excludes(verify_flag);
  auto* identities = app.add_subcommand("identities", "Check the Catalan and composition-sum identities");
  identities->add_option("--max-n", max_n, "Largest n to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (finite->parsed()) return cmd_finite(path, out, err);
  if (count->parsed()) return cmd_count(path, out, err);
  if (signdec->parsed()) return cmd_signdec(path, per_epsilon, out, err);
  if (hasse->parsed()) return cmd_hasse(path, format == "json" ? HasseFormat::Json : HasseFormat::Dot, out, err);
  if (brauer->parsed()) {
    if (!emit_quiver && !verify) {
      err << "error: brauer needs --emit-quiver or --verify\n";
      return kInputError;
    }
    return cmd_brauer(brauer_kind == "line" ? BrauerKind::Line : BrauerKind::Cycle, brauer_n,
                      emit_quiver ? BrauerAction::EmitQuiver : BrauerAction::Verify, out, err);
  }
  if (identities->parsed()) return cmd_identities(max_n, out, err);
  return kInputError;
}

}  // namespace signdec::cli
