#include "sqleg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>

#include "sqleg/serialize.hpp"

namespace sqleg::cli {

namespace {

enum class Status { ok, violated };

struct Outcome {
  json inputs;
  json result;
  Status status = Status::ok;
};

Natural parse_natural(const std::string& text, const std::string& flag) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(errc::invalid_input, flag + " must be a nonnegative decimal integer, got '" + text + "'");
  return Natural(text);
}

OddSquarefree parse_odd_squarefree(const std::string& text, const std::string& flag) {
  Natural v = parse_natural(text, flag);
  try {
    return OddSquarefree(std::move(v));
  } catch (const Error& e) {
    fail(e.code(), flag + ": " + e.what());
  }
}

std::string inline_value(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_object(const json& obj, std::ostream& os, int indent);

void render_entry(const std::string& key, const json& v, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    render_object(v, os, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (const json& item : v) {
      os << pad << "  -";
      for (auto it = item.begin(); it != item.end(); ++it)
        os << ' ' << it.key() << '=' << inline_value(it.value());
      os << '\n';
    }
  } else {
    os << pad << key << ": " << inline_value(v) << '\n';
  }
}

void render_object(const json& obj, std::ostream& os, int indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) render_entry(it.key(), it.value(), os, indent);
}

void render_text(const json& envelope, std::ostream& os) {
  os << "command: " << envelope["command"].get<std::string>() << '\n';
  os << "status: " << envelope["status"].get<std::string>() << '\n';
  render_entry("inputs", envelope["inputs"], os, 0);
  render_entry("result", envelope["result"], os, 0);
}

struct Flags {
  std::string s1, s2, n, p, q, d1, d2, d3, w, u, v, x, y, z, bound;
  unsigned workers = 1;
  int family = 1;
};

using Handler = std::function<Outcome(const Flags&)>;

// --- handlers ---

Outcome do_gcd(const Flags& f) {
  Natural a = parse_natural(f.x, "--x"), b = parse_natural(f.y, "--y");
  return {{{"x", dec(a)}, {"y", dec(b)}}, {{"gcd", dec(gcd(a, b))}}, Status::ok};
}

Outcome do_isqrt(const Flags& f) {
  Natural a = parse_natural(f.x, "--x");
  SqrtResult r = isqrt(a);
  return {{{"x", dec(a)}}, {{"root", dec(r.root)}, {"exact", r.exact}}, Status::ok};
}

Outcome do_factor(const Flags& f) {
  Natural a = parse_natural(f.n, "--n");
  Factorization fact = factorize(a);
  SquarefreePart sp = squarefree_part(a);
  return {{{"n", dec(a)}},
          {{"factorization", to_json(fact)},
           {"squarefree_part", json{{"s", dec(sp.s)}, {"f", dec(sp.f)}}}},
          Status::ok};
}

Outcome do_symbol(const Flags& f) {
  Natural a = parse_natural(f.x, "--x");
  if (!f.p.empty()) {
    Natural p = parse_natural(f.p, "--p");
    int value = legendre(a, p);
    return {{{"x", dec(a)}, {"p", dec(p)}},
            {{"symbol", "legendre"}, {"value", value}},
            Status::ok};
  }
  Natural m = parse_natural(f.n, "--n");
  int value = jacobi(a, m);
  return {{{"x", dec(a)}, {"n", dec(m)}},
          {{"symbol", "jacobi"}, {"value", value}},
          Status::ok};
}

Outcome do_qr(const Flags& f) {
  Natural a = parse_natural(f.x, "--x");
  OddSquarefree m = parse_odd_squarefree(f.n, "--n");
  bool residue = is_qr_mod_odd_squarefree(a, m);
  return {{{"x", dec(a)}, {"n", dec(m.value())}}, {{"is_residue", residue}}, Status::ok};
}

Outcome do_triples(const Flags& f) {
  if (!f.bound.empty()) {
    Natural c_max = parse_natural(f.bound, "--bound");
    std::vector<PrimitiveTriple> all = generate_primitive_triples(c_max);
    json list = json::array();
    for (const PrimitiveTriple& t : all) list.push_back(to_json(t));
    return {{{"bound", dec(c_max)}},
            {{"count", all.size()}, {"triples", list}},
            Status::ok};
  }
  if (f.x.empty() || f.y.empty())
    fail(errc::invalid_input, "triples needs either --bound or both --x and --y");
  Natural m = parse_natural(f.x, "--x"), n = parse_natural(f.y, "--y");
  PrimitiveTriple t = triple_from_params(m, n);
  return {{{"x", dec(m)}, {"y", dec(n)}}, to_json(t), Status::ok};
}

Outcome do_dickson(const Flags& f) {
  Natural m = parse_natural(f.x, "--x"), n = parse_natural(f.y, "--y");
  DicksonDecomposition d = decompose_leg_difference(m, n);
  return {{{"x", dec(m)}, {"y", dec(n)}}, to_json(d), Status::ok};
}

Outcome do_check_t1(const Flags& f) {
  Natural s1 = parse_natural(f.s1, "--s1"), s2 = parse_natural(f.s2, "--s2");
  Theorem1Report rep = check_theorem1(s1, s2);
  return {{{"s1", dec(s1)}, {"s2", dec(s2)}}, to_json(rep),
          rep.satisfied ? Status::ok : Status::violated};
}

Outcome do_check_t2(const Flags& f) {
  OddSquarefree n = parse_odd_squarefree(f.n, "--n");
  Theorem2Report rep = check_theorem2(n);
  json result = to_json(rep);
  result["characterization"] = characterize_theorem2(n);
  return {{{"n", dec(n.value())}}, result, rep.satisfied ? Status::ok : Status::violated};
}

Outcome do_check_t3(const Flags& f) {
  Natural p = parse_natural(f.p, "--p"), q = parse_natural(f.q, "--q");
  bool ok = check_theorem3(p, q);
  return {{{"p", dec(p)}, {"q", dec(q)}},
          {{"satisfied", ok}},
          ok ? Status::ok : Status::violated};
}

Outcome do_check_t4(const Flags& f) {
  Natural p = parse_natural(f.p, "--p"), q = parse_natural(f.q, "--q");
  bool ok = check_theorem4(p, q);
  return {{{"p", dec(p)}, {"q", dec(q)}},
          {{"satisfied", ok}},
          ok ? Status::ok : Status::violated};
}

Outcome do_gen_t1_pairs(const Flags& f) {
  Natural limit = parse_natural(f.bound, "--bound");
  auto pairs = generate_theorem1_pairs(limit, f.family);
  json list = json::array();
  for (const auto& [a, b] : pairs) list.push_back(json::array({dec(a), dec(b)}));
  return {{{"bound", dec(limit)}, {"family", f.family}},
          {{"count", pairs.size()}, {"pairs", list}},
          Status::ok};
}

Outcome do_gen_t2_moduli(const Flags& f) {
  Natural limit = parse_natural(f.bound, "--bound");
  auto moduli = generate_theorem2_moduli(limit);
  json list = json::array();
  for (const OddSquarefree& n : moduli) list.push_back(dec(n.value()));
  return {{{"bound", dec(limit)}}, {{"count", moduli.size()}, {"moduli", list}}, Status::ok};
}

Outcome do_audit_t1(const Flags& f) {
  OddSquarefree s1 = parse_odd_squarefree(f.s1, "--s1");
  OddSquarefree s2 = parse_odd_squarefree(f.s2, "--s2");
  CaseAuditReport rep = audit_theorem1(s1, s2);
  return {{{"s1", dec(s1.value())}, {"s2", dec(s2.value())}}, to_json(rep),
          rep.all_refuted ? Status::ok : Status::violated};
}

Outcome do_audit_t2(const Flags& f) {
  OddSquarefree n = parse_odd_squarefree(f.n, "--n");
  CaseAuditReport rep = audit_theorem2_case1(n);
  return {{{"n", dec(n.value())}}, to_json(rep),
          rep.all_refuted ? Status::ok : Status::violated};
}

Outcome do_audit_t3(const Flags& f) {
  Natural p = parse_natural(f.p, "--p"), q = parse_natural(f.q, "--q");
  CaseAuditReport rep = audit_theorem3(p, q);
  return {{{"p", dec(p)}, {"q", dec(q)}}, to_json(rep),
          rep.all_refuted ? Status::ok : Status::violated};
}

Outcome do_search_eq1(const Flags& f) {
  OddSquarefree s1 = parse_odd_squarefree(f.s1, "--s1");
  OddSquarefree s2 = parse_odd_squarefree(f.s2, "--s2");
  Natural bound = parse_natural(f.bound, "--bound");
  SearchCertificate cert = search_eq1(s1, s2, bound, f.workers);
  return {{{"s1", dec(s1.value())},
           {"s2", dec(s2.value())},
           {"bound", dec(bound)},
           {"workers", f.workers}},
          to_json(cert),
          cert.outcome == SearchOutcome::exhausted ? Status::ok : Status::violated};
}

Outcome do_search_eq19(const Flags& f) {
  OddSquarefree d1 = parse_odd_squarefree(f.d1, "--d1");
  OddSquarefree d2 = parse_odd_squarefree(f.d2, "--d2");
  OddSquarefree d3 = parse_odd_squarefree(f.d3, "--d3");
  Natural bound = parse_natural(f.bound, "--bound");
  SearchCertificate cert = search_eq19(d1, d2, d3, bound, f.workers);
  return {{{"d1", dec(d1.value())},
           {"d2", dec(d2.value())},
           {"d3", dec(d3.value())},
           {"bound", dec(bound)},
           {"workers", f.workers}},
          to_json(cert),
          cert.outcome == SearchOutcome::exhausted ? Status::ok : Status::violated};
}

Outcome do_lift(const Flags& f) {
  Eq19Solution sol{parse_odd_squarefree(f.d1, "--d1"), parse_odd_squarefree(f.d2, "--d2"),
                   parse_odd_squarefree(f.d3, "--d3"), parse_natural(f.w, "--w"),
                   parse_natural(f.u, "--u"),          parse_natural(f.v, "--v")};
  QuarticSolution lifted = lift(sol);
  return {to_json(sol), {{"eq19", to_json(sol)}, {"lifted", to_json(lifted)}}, Status::ok};
}

QuarticSolution quartic_from_flags(const Flags& f) {
  return QuarticSolution{parse_odd_squarefree(f.n, "--n"), parse_natural(f.x, "--x"),
                         parse_natural(f.y, "--y"), parse_natural(f.z, "--z")};
}

Outcome do_decompose(const Flags& f) {
  QuarticSolution sol = quartic_from_flags(f);
  auto [inner, trace] = decompose(sol);
  return {to_json(sol), {{"eq19", to_json(inner)}, {"trace", to_json(trace)}}, Status::ok};
}

Outcome do_descent(const Flags& f) {
  QuarticSolution sol = quartic_from_flags(f);
  QuarticSolution next = descent_step(sol);
  return {to_json(sol), {{"next", to_json(next)}}, Status::ok};
}

Outcome do_t4_divisors(const Flags& f) {
  Natural p = parse_natural(f.p, "--p"), q = parse_natural(f.q, "--q");
  auto rows = theorem4_divisors(p, q);
  json list = json::array();
  std::size_t admissible = 0;
  for (const DivisorTriple& row : rows) {
    if (row.status == DivisorStatus::admissible) ++admissible;
    list.push_back(to_json(row));
  }
  return {{{"p", dec(p)}, {"q", dec(q)}},
          {{"rows", list}, {"admissible_count", admissible}},
          Status::ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification toolkit for Pythagorean triples with square-multiple legs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_file;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out_file, "write output to FILE instead of stdout");

  Flags f;
  std::vector<std::pair<CLI::App*, Handler>> routes;
  auto route = [&](CLI::App* leaf, Handler h) { routes.emplace_back(leaf, std::move(h)); };

  {
    CLI::App* c = app.add_subcommand("gcd", "greatest common divisor");
    c->add_option("--x", f.x)->required();
    c->add_option("--y", f.y)->required();
    route(c, do_gcd);
  }
  {
    CLI::App* c = app.add_subcommand("isqrt", "integer square root with exactness flag");
    c->add_option("--x", f.x)->required();
    route(c, do_isqrt);
  }
  {
    CLI::App* c = app.add_subcommand("factor", "prime factorization and squarefree part");
    c->add_option("--n", f.n)->required();
    route(c, do_factor);
  }
  {
    CLI::App* c = app.add_subcommand("symbol", "Legendre (--p) or Jacobi (--n) symbol");
    c->add_option("--x", f.x)->required();
    CLI::Option* p = c->add_option("--p", f.p);
    CLI::Option* n = c->add_option("--n", f.n);
    p->excludes(n);
    route(c, [](const Flags& fl) {
      if (fl.p.empty() && fl.n.empty())
        fail(errc::invalid_input, "symbol needs --p (Legendre) or --n (Jacobi)");
      return do_symbol(fl);
    });
  }
  {
    CLI::App* c = app.add_subcommand("qr", "quadratic residue test modulo odd squarefree --n");
    c->add_option("--x", f.x)->required();
    c->add_option("--n", f.n)->required();
    route(c, do_qr);
  }
  {
    CLI::App* c = app.add_subcommand(
        "triples", "generate primitive triples (--bound) or build one from --x > --y");
    c->add_option("--bound", f.bound);
    c->add_option("--x", f.x);
    c->add_option("--y", f.y);
    route(c, do_triples);
  }
  {
    CLI::App* c = app.add_subcommand("dickson", "leg-difference representation for --x > --y");
    c->add_option("--x", f.x)->required();
    c->add_option("--y", f.y)->required();
    route(c, do_dickson);
  }
  {
    CLI::App* check = app.add_subcommand("check", "theorem hypothesis checks");
    check->require_subcommand(1);
    check->fallthrough();
    CLI::App* t1 = check->add_subcommand("t1");
    t1->add_option("--s1", f.s1)->required();
    t1->add_option("--s2", f.s2)->required();
    route(t1, do_check_t1);
    CLI::App* t2 = check->add_subcommand("t2");
    t2->add_option("--n", f.n)->required();
    route(t2, do_check_t2);
    CLI::App* t3 = check->add_subcommand("t3");
    t3->add_option("--p", f.p)->required();
    t3->add_option("--q", f.q)->required();
    route(t3, do_check_t3);
    CLI::App* t4 = check->add_subcommand("t4");
    t4->add_option("--p", f.p)->required();
    t4->add_option("--q", f.q)->required();
    route(t4, do_check_t4);
  }
  {
    CLI::App* gen = app.add_subcommand("gen", "example generators");
    gen->require_subcommand(1);
    gen->fallthrough();
    CLI::App* pairs = gen->add_subcommand("t1-pairs");
    pairs->add_option("--bound", f.bound)->required();
    pairs->add_option("--family", f.family)->required()->check(CLI::Range(1, 4));
    route(pairs, do_gen_t1_pairs);
    CLI::App* moduli = gen->add_subcommand("t2-moduli");
    moduli->add_option("--bound", f.bound)->required();
    route(moduli, do_gen_t2_moduli);
  }
  {
    CLI::App* audit = app.add_subcommand("audit", "mechanized proof case analyses");
    audit->require_subcommand(1);
    audit->fallthrough();
    CLI::App* t1 = audit->add_subcommand("t1");
    t1->add_option("--s1", f.s1)->required();
    t1->add_option("--s2", f.s2)->required();
    route(t1, do_audit_t1);
    CLI::App* t2 = audit->add_subcommand("t2");
    t2->add_option("--n", f.n)->required();
    route(t2, do_audit_t2);
    CLI::App* t3 = audit->add_subcommand("t3");
    t3->add_option("--p", f.p)->required();
    t3->add_option("--q", f.q)->required();
    route(t3, do_audit_t3);
  }
  {
    CLI::App* search = app.add_subcommand("search", "bounded exhaustive searches");
    search->require_subcommand(1);
    search->fallthrough();
    CLI::App* eq1 = search->add_subcommand("eq1");
    eq1->add_option("--s1", f.s1)->required();
    eq1->add_option("--s2", f.s2)->required();
    eq1->add_option("--bound", f.bound)->required();
    eq1->add_option("--workers", f.workers);
    route(eq1, do_search_eq1);
    CLI::App* eq19 = search->add_subcommand("eq19");
    eq19->add_option("--d1", f.d1)->required();
    eq19->add_option("--d2", f.d2)->required();
    eq19->add_option("--d3", f.d3)->required();
    eq19->add_option("--bound", f.bound)->required();
    eq19->add_option("--workers", f.workers);
    route(eq19, do_search_eq19);
  }
  {
    CLI::App* c = app.add_subcommand("lift", "lift an eq19 solution to the quartic equation");
    for (auto [name, ref] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--d1", &f.d1}, {"--d2", &f.d2}, {"--d3", &f.d3},
             {"--w", &f.w},   {"--u", &f.u},   {"--v", &f.v}})
      c->add_option(name, *ref)->required();
    route(c, do_lift);
  }
  {
    CLI::App* c = app.add_subcommand("decompose", "decompose a quartic solution (x even)");
    for (auto [name, ref] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--n", &f.n}, {"--x", &f.x}, {"--y", &f.y}, {"--z", &f.z}})
      c->add_option(name, *ref)->required();
    route(c, do_decompose);
  }
  {
    CLI::App* c = app.add_subcommand("descent", "one infinite-descent step");
    for (auto [name, ref] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--n", &f.n}, {"--x", &f.x}, {"--y", &f.y}, {"--z", &f.z}})
      c->add_option(name, *ref)->required();
    route(c, do_descent);
  }
  {
    CLI::App* c = app.add_subcommand("t4-divisors", "admissible divisor triples for Theorem 4");
    c->add_option("--p", f.p)->required();
    c->add_option("--q", f.q)->required();
    route(c, do_t4_divisors);
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto selected = std::find_if(routes.begin(), routes.end(),
                                     [](const auto& r) { return r.first->parsed(); });
  if (selected == routes.end()) {
    err << "error: no subcommand selected\n";
    return 2;
  }

  std::string command = selected->first->get_name();
  for (const CLI::App* parent = selected->first->get_parent(); parent && parent != &app;
       parent = parent->get_parent())
    command = parent->get_name() + " " + command;

  json envelope{{"command", command}};
  int exit_code = 0;
  try {
    Outcome outcome = selected->second(f);
    envelope["inputs"] = std::move(outcome.inputs);
    envelope["result"] = std::move(outcome.result);
    envelope["status"] = outcome.status == Status::ok ? "ok" : "violated";
    exit_code = outcome.status == Status::ok ? 0 : 1;
  } catch (const Error& e) {
    envelope["inputs"] = json::object();
    envelope["result"] = json{{"error", json{{"code", to_string(e.code())}, {"message", e.what()}}}};
    envelope["status"] = "error";
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    exit_code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      err << "error: cannot open " << out_file << " for writing\n";
      return 2;
    }
    sink = &file;
  }
  if (format == "json")
    *sink << envelope.dump(2) << '\n';
  else
    render_text(envelope, *sink);
  return exit_code;
}

}  // namespace sqleg::cli
