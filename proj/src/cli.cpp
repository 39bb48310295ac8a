#include "rankext/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "rankext/fixtures.hpp"

namespace rankext::cli {

namespace {

using io::Json;

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open \"" + arg + "\"");
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "JSON parse error in \"" + arg + "\": " + e.what());
  }
}

Json subspace_json(const SubspaceBasis& s) {
  Json basis = Json::array();
  for (Eigen::Index r = 0; r < s.vectors().rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < s.vectors().cols(); ++c) row.push_back(s.vectors()(r, c));
    basis.push_back(std::move(row));
  }
  return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json refutation_json(const PropertyPRefutation& r) {
  Json j{{"kind", std::string(refutation_kind_name(r.kind))}};
  if (r.kind == RefutationKind::row_dimension || r.kind == RefutationKind::column_dimension) {
    j["domain_dim"] = r.domain_dim;
    j["image_dim"] = r.image_dim;
  } else {
    j["smaller"] = io::to_json(*r.smaller);
    j["larger"] = io::to_json(*r.larger);
  }
  return j;
}

void print_human(const Json& report, std::ostream& out) {
  if (!report.is_object()) {
    out << report.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) {
    // Lists of records read better one per line.
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const Json& item : value) out << "  " << item.dump() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
}

struct Inputs {
  std::string matrix;
  std::string code;
  std::string map;
  std::string path;
  std::string assignment;
  std::string witness;
  std::string name;
  std::vector<std::string> params;
  bool refute_only = false;
  bool all = false;
  bool allow_transpose = false;
  bool exhaustive = false;
};

Json cmd_path_find(const Inputs& in) {
  const Support s = Support::of(io::matrix_from_json(load_json(in.matrix)));
  const auto path = find_closed_simple_path(s);
  if (!path) return Json{{"found", false}, {"irreducible", true}};
  Json j = io::path_report(*path, validate_path(s, path->positions));
  j["found"] = true;
  return j;
}

Json cmd_path_chain(const Inputs& in) {
  const Support s = Support::of(io::matrix_from_json(load_json(in.matrix)));
  Json j = io::to_json(reduction_chain(s));
  if (in.all) {
    Json lengths = Json::object();
    Json distinct = Json::array();
    for (const auto& [len, count] : enumerate_all_chains(s)) {
      lengths[std::to_string(len)] = count;
      distinct.push_back(len);
    }
    j["all_lengths"] = std::move(lengths);
    j["distinct_lengths"] = std::move(distinct);
  }
  return j;
}

Json cmd_property_p(const Inputs& in) {
  const CodeMap phi = io::map_from_json(load_json(in.map));
  Json j = Json::object();
  const auto refutation = refute_property_p(phi);
  j["refutation"] = refutation ? refutation_json(*refutation) : Json(nullptr);
  if (in.refute_only) {
    j["verdict"] = refutation ? "refuted" : "not-refuted";
    return j;
  }
  const auto witness = property_p_witness(phi);
  j["verdict"] = witness ? "witness" : "absent";
  j["witness"] = witness ? io::to_json(*witness) : Json(nullptr);
  return j;
}

Json cmd_extend_elementary(const Inputs& in) {
  const ScalarAssignment a = io::assignment_from_json(load_json(in.assignment));
  try {
    const ElementaryExtension ext = extend_elementary(a);
    return Json{{"isometry", true}, {"witness", io::to_json(ext.witness)}, {"chain", io::to_json(ext.chain)}};
  } catch (const NotAnIsometryError& e) {
    return Json{{"isometry", false},
                {"violation",
                 {{"position", io::to_json(e.position())}, {"assigned", e.assigned()}, {"induced", e.induced()}}},
                {"message", e.what()}};
  }
}

Json cmd_extend_rankone(const Inputs& in) {
  const CodeMap phi = io::map_from_json(load_json(in.map));
  PropertyPWitness w;
  if (!in.witness.empty()) {
    const Json wj = load_json(in.witness);
    const FieldPtr& f = phi.domain().field();
    if (!wj.is_object() || !wj.contains("A") || !wj.contains("B")) {
      throw Error(ErrorCode::InvalidInput, "witness needs keys \"A\" and \"B\"");
    }
    w = {io::matrix_from_json(wj["A"], f), io::matrix_from_json(wj["B"], f)};
  } else {
    if (phi.domain().field()->q() != 2) throw Error(ErrorCode::WrongField, "the rank-one extension needs GF(2)");
    const auto found = property_p_witness(phi);
    if (!found) return Json{{"property_p", false}, {"extendable", nullptr}};
    w = *found;
  }
  const ExtensionWitness ext = extend_rank_one_f2(phi, w);
  return Json{{"property_p", true}, {"extendable", true}, {"witness", io::to_json(ext)}};
}

Json cmd_oracle(const Inputs& in) {
  const CodeMap phi = io::map_from_json(load_json(in.map));
  OracleOptions opts;
  opts.allow_transpose = in.allow_transpose;
  opts.strategy = in.exhaustive ? OracleStrategy::exhaustive : OracleStrategy::automatic;
  const OracleResult r = oracle_extension(phi, opts);
  Json j{{"extendable", r.witness.has_value()}};
  j["witness"] = r.witness ? io::to_json(*r.witness) : Json(nullptr);
  j["transpose_searched"] = r.transpose_searched;
  j["strategies"] = r.strategies;
  j["candidates"] = r.candidates;
  return j;
}

Json cmd_example_list() {
  Json list = Json::array();
  for (const FixtureDescriptor& d : list_examples()) {
    Json defaults = Json::object();
    for (const auto& [k, v] : d.defaults) defaults[k] = v;
    list.push_back(Json{{"name", d.name}, {"summary", d.summary}, {"defaults", std::move(defaults)}});
  }
  return Json{{"examples", std::move(list)}};
}

Json cmd_example_run(const Inputs& in) {
  FixtureParams params;
  for (const std::string& kv : in.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidInput, "--param expects key=value");
    try {
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      const long long v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      params[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "--param value must be an integer: " + kv);
    }
  }
  return to_json(run_example(in.name, params));
}

}  // namespace

bool matches_expectation(const Json& report, const Json& expected) {
  if (expected.is_object()) {
    if (!report.is_object()) return false;
    for (const auto& [key, value] : expected.items()) {
      const auto it = report.find(key);
      if (it == report.end() || !matches_expectation(*it, value)) return false;
    }
    return true;
  }
  return report == expected;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rankext: isometries of rank-metric codes and their extensions", "rankext"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string expect;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_option("--expect", expect, "JSON (inline or file) the report must match; exit 3 otherwise");

  Inputs in;
  std::function<Json()> action;

  auto* rank_cmd = app.add_subcommand("rank", "rank of a matrix");
  rank_cmd->add_option("--matrix", in.matrix, "matrix JSON")->required();
  rank_cmd->callback([&] {
    action = [&] { return Json{{"rank", rank(io::matrix_from_json(load_json(in.matrix)))}}; };
  });

  auto* mindist = app.add_subcommand("mindist", "minimum rank distance of a code");
  mindist->add_option("--code", in.code, "code JSON")->required();
  mindist->callback([&] {
    action = [&] {
      const RankCode code = io::code_from_json(load_json(in.code));
      return Json{{"dim", code.dim()}, {"min_distance", min_distance(code)}};
    };
  });

  auto* lines = app.add_subcommand("linespaces", "row and column spaces of a matrix or a code");
  auto* lm = lines->add_option("--matrix", in.matrix, "matrix JSON");
  auto* lc = lines->add_option("--code", in.code, "code JSON");
  lm->excludes(lc);
  lines->callback([&] {
    action = [&]() -> Json {
      LineSpaces ls = !in.code.empty() ? code_line_spaces(io::code_from_json(load_json(in.code)))
                      : !in.matrix.empty()
                          ? line_spaces(io::matrix_from_json(load_json(in.matrix)))
                          : throw Error(ErrorCode::InvalidInput, "linespaces needs --matrix or --code");
      return Json{{"rowspace", subspace_json(ls.rowspace)}, {"colspace", subspace_json(ls.colspace)}};
    };
  });

  auto* check = app.add_subcommand("check-isometry", "rank preservation on every codeword");
  check->add_option("--map", in.map, "map JSON")->required();
  check->callback([&] {
    action = [&] {
      const CodeMap phi = io::map_from_json(load_json(in.map));
      const auto violation = find_rank_violation(phi);
      return Json{{"is_isometry", !violation}, {"violation", violation ? io::to_json(*violation) : Json(nullptr)}};
    };
  });

  auto* pp = app.add_subcommand("property-p", "Property 1 witness search and refutation");
  pp->add_option("--map", in.map, "map JSON")->required();
  pp->add_flag("--refute-only", in.refute_only, "run only the cheap refutation search");
  pp->callback([&] { action = [&] { return cmd_property_p(in); }; });

  auto* path = app.add_subcommand("path", "closed simple paths and reduction chains");
  path->require_subcommand(1);
  auto* pfind = path->add_subcommand("find", "find a closed simple path");
  pfind->add_option("--matrix", in.matrix, "matrix JSON")->required();
  pfind->callback([&] { action = [&] { return cmd_path_find(in); }; });
  auto* pval = path->add_subcommand("validate", "classify a position sequence");
  pval->add_option("--matrix", in.matrix, "matrix JSON")->required();
  pval->add_option("--path", in.path, "[[row, col], ...] 1-based, inline or file")->required();
  pval->callback([&] {
    action = [&] {
      const Support s = Support::of(io::matrix_from_json(load_json(in.matrix)));
      const Json pj = load_json(in.path);
      const Path p{io::positions_from_json(pj.is_object() && pj.contains("path") ? pj["path"] : pj)};
      return io::path_report(p, validate_path(s, p.positions));
    };
  });
  auto* pchain = path->add_subcommand("chain", "greedy path-reduction chain");
  pchain->add_option("--matrix", in.matrix, "matrix JSON")->required();
  pchain->add_flag("--all", in.all, "also enumerate every chain and report the lengths");
  pchain->callback([&] { action = [&] { return cmd_path_chain(in); }; });

  auto* ee = app.add_subcommand("extend-elementary", "extend phi(E_h) = alpha_h E_h to the ambient space");
  ee->add_option("--assignment", in.assignment, "assignment JSON")->required();
  ee->callback([&] { action = [&] { return cmd_extend_elementary(in); }; });

  auto* er = app.add_subcommand("extend-rankone-f2", "GF(2) rank-one extension from a Property 1 witness");
  er->add_option("--map", in.map, "map JSON")->required();
  er->add_option("--witness", in.witness, "{\"A\": matrix, \"B\": matrix}; searched when omitted");
  er->callback([&] { action = [&] { return cmd_extend_rankone(in); }; });

  auto* oracle = app.add_subcommand("oracle", "exact extendability by search over GL_m x GL_n");
  oracle->add_option("--map", in.map, "map JSON")->required();
  oracle->add_flag("--allow-transpose", in.allow_transpose, "also search M -> A M^t B (square only)");
  oracle->add_flag("--exhaustive", in.exhaustive, "plain double loop without pruning");
  oracle->callback([&] { action = [&] { return cmd_oracle(in); }; });

  auto* ex = app.add_subcommand("example", "built-in worked examples");
  ex->require_subcommand(1);
  auto* exl = ex->add_subcommand("list", "list the examples");
  exl->callback([&] { action = [] { return cmd_example_list(); }; });
  auto* exr = ex->add_subcommand("run", "run one example against its expected verdicts");
  exr->add_option("name", in.name, "example name")->required();
  exr->add_option("--param", in.params, "key=value parameter override")->allow_extra_args(false);
  exr->callback([&] { action = [&] { return cmd_example_run(in); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (json) {
      out << io::error_json(ErrorCode::InvalidInput, e.what()).dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kExitInput;
  }

  auto fail = [&](ErrorCode code, const std::string& message) {
    if (json) {
      out << io::error_json(code, message).dump() << '\n';
    } else {
      err << "error: " << error_name(code) << ": " << message << '\n';
    }
    return is_resource_error(code) ? kExitResource : kExitInput;
  };

  Json report;
  Json expected;
  try {
    if (!expect.empty()) expected = load_json(expect);
    report = action();
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  }

  if (json) {
    out << report.dump() << '\n';
  } else {
    print_human(report, out);
  }
  if (!expect.empty() && !matches_expectation(report, expected)) {
    err << "expectation mismatch: expected " << expected.dump() << '\n';
    return kExitExpectMismatch;
  }
  return kExitOk;
}

}  // namespace rankext::cli
