// gkspec command-line tool. Exit codes: 0 success, 1 invalid input or
// computational failure, 2 a verification suite failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gkspec/gkspec.hpp"

namespace {

using gkspec::u128;
using nlohmann::json;

enum class Format { Plain, Json, Dot };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string list(const gkspec::Spectrum& s) { return "[" + gkspec::to_csv(s) + "]"; }

std::string list(std::span<const u128> v) { return "[" + gkspec::join(v) + "]"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_sz(unsigned alpha, Format fmt) {
  const gkspec::SuzukiParams p = gkspec::params(alpha);
  const gkspec::Spectrum mu = gkspec::mu_sz(alpha);
  const auto t = gkspec::max_coclique(gkspec::prime_graph(mu));
  if (fmt == Format::Json) {
    emit({{"alpha", alpha},
          {"q", gkspec::to_json_value(p.q)},
          {"s", gkspec::to_json_value(p.s)},
          {"m", gkspec::to_json(p.m())},
          {"order", p.order.str()},
          {"mu", gkspec::to_json(mu)},
          {"t", t.size},
          {"coclique", gkspec::to_json(t.witness)}});
    return 0;
  }
  std::cout << "alpha=" << alpha << "\nq=" << gkspec::to_string(p.q) << "\ns=" << gkspec::to_string(p.s)
            << "\nm=" << list(p.m()) << "\norder=" << p.order.str() << "\nmu=" << list(mu) << "\nt=" << t.size
            << "\ncoclique=" << list(t.witness) << "\n";
  return 0;
}

int cmd_sz_square(unsigned alpha, Format fmt) {
  const gkspec::Spectrum sq = gkspec::square_spectrum(alpha);
  const auto w = gkspec::nonsolvability_criterion(sq);
  if (fmt == Format::Json) {
    emit({{"alpha", alpha},
          {"q", gkspec::to_json_value(gkspec::params(alpha).q)},
          {"mu", gkspec::to_json(sq)},
          {"witness", w ? gkspec::to_json(w->sigma) : json(nullptr)}});
    return 0;
  }
  std::cout << "alpha=" << alpha << "\nq=" << gkspec::to_string(gkspec::params(alpha).q) << "\nmu=" << list(sq)
            << "\nwitness=" << (w ? gkspec::join(w->sigma) : "none") << "\n";
  return 0;
}

int cmd_recognize(unsigned alpha, std::optional<unsigned> p, Format fmt) {
  if (p) {
    const auto tw = gkspec::twisted_square_spectrum(alpha, *p);
    const auto oc = gkspec::outer_class_count(alpha, *p);
    std::vector<std::string> reps;
    for (unsigned l : oc.representatives) reps.push_back("X" + std::to_string(l));
    if (fmt == Format::Json) {
      emit({{"alpha", alpha},
            {"p", *p},
            {"mu", gkspec::to_json(tw.spectrum)},
            {"isospectral", tw.isospectral},
            {"outer_classes", oc.classes},
            {"representatives", reps}});
      return 0;
    }
    std::cout << "alpha=" << alpha << "\np=" << *p << "\nmu=" << list(tw.spectrum)
              << "\nisospectral=" << (tw.isospectral ? "true" : "false") << "\nouter_classes=" << oc.classes
              << "\nrepresentatives=";
    for (std::size_t i = 0; i < reps.size(); ++i) std::cout << (i ? "," : "") << reps[i];
    std::cout << "\n";
    return 0;
  }
  const auto c = gkspec::classify_isospectral_squares(alpha);
  if (fmt == Format::Json) {
    emit(gkspec::to_json(c));
    return 0;
  }
  std::cout << "q=" << gkspec::to_string(c.q) << "\ncount=" << c.count << "\n";
  for (const auto& g : c.groups)
    std::cout << gkspec::short_label(g) << "  " << g.label << "  mu=" << list(g.mu) << "\n";
  return 0;
}

int cmd_spectrum(const std::string& file, std::size_t cap, Format fmt) {
  std::ifstream in(file);
  if (!in) throw gkspec::InvalidInput("cannot open group file '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw gkspec::InvalidInput("group file '" + file + "' is not valid JSON: " + e.what());
  }
  const gkspec::GroupSpec spec = gkspec::group_spec_from_json(j);
  const gkspec::Spectrum mu = gkspec::spectrum_of(spec, cap);
  const u128 order = gkspec::group_order(spec, cap);
  const auto t = gkspec::max_coclique(gkspec::prime_graph(mu));
  if (fmt == Format::Json) {
    emit({{"group", spec.describe()},
          {"order", gkspec::to_json_value(order)},
          {"mu", gkspec::to_json(mu)},
          {"exponent", gkspec::to_json_value(mu.exponent())},
          {"t", t.size}});
    return 0;
  }
  std::cout << "group=" << spec.describe() << "\norder=" << gkspec::to_string(order) << "\nmu=" << list(mu)
            << "\nexponent=" << gkspec::to_string(mu.exponent()) << "\nt=" << t.size << "\n";
  return 0;
}

int cmd_criterion(const std::string& mu_text, Format fmt) {
  const gkspec::Spectrum mu = gkspec::spectrum_from_csv(mu_text);
  const auto w = gkspec::nonsolvability_criterion(mu);
  if (fmt == Format::Json) {
    emit({{"mu", gkspec::to_json(mu)}, {"witness", w ? gkspec::to_json(w->sigma) : json(nullptr)}});
    return 0;
  }
  std::cout << "witness=" << (w ? gkspec::join(w->sigma) : "none") << "\n";
  return 0;
}

int cmd_prime_graph(const std::string& mu_text, Format fmt) {
  const gkspec::PrimeGraph g = gkspec::prime_graph(gkspec::spectrum_from_csv(mu_text));
  const auto t = gkspec::max_coclique(g);
  switch (fmt) {
    case Format::Dot:
      std::cout << gkspec::to_dot(g);
      break;
    case Format::Json: {
      json j = gkspec::to_json(g);
      j["t"] = t.size;
      j["coclique"] = gkspec::to_json(t.witness);
      emit(j);
      break;
    }
    case Format::Plain:
      std::cout << "vertices=" << list(g.vertices) << "\nedges=";
      for (std::size_t i = 0; i < g.edges.size(); ++i)
        std::cout << (i ? "," : "") << gkspec::to_string(g.edges[i].first) << "-"
                  << gkspec::to_string(g.edges[i].second);
      std::cout << "\nt=" << t.size << "\ncoclique=" << list(t.witness) << "\n";
      break;
  }
  return 0;
}

int cmd_zsigmondy(const std::string& base, unsigned exp, Format fmt) {
  const auto r = gkspec::primitive_prime_divisor(gkspec::parse_u128(base), exp);
  if (fmt == Format::Json) {
    json j{{"base", gkspec::to_json_value(r.base)}, {"exponent", r.exponent}};
    if (r.has_prime()) {
      j["prime"] = gkspec::to_json_value(r.prime());
      j["exception"] = nullptr;
    } else {
      j["prime"] = nullptr;
      j["exception"] = gkspec::to_string(r.exception());
    }
    emit(j);
    return 0;
  }
  if (r.has_prime())
    std::cout << "r=" << gkspec::to_string(r.prime()) << "\n";
  else
    std::cout << "exception=" << gkspec::to_string(r.exception()) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, Format fmt) {
  std::vector<std::string> names;
  if (suite == "all")
    names = gkspec::suite_names();
  else
    names.push_back(suite);
  bool all_pass = true;
  json reports = json::array();
  for (const std::string& n : names) {
    const gkspec::SuiteReport r = gkspec::run_suite(n);
    all_pass = all_pass && r.passed();
    if (fmt == Format::Json)
      reports.push_back(gkspec::to_json(r));
    else
      std::cout << r.table();
  }
  if (fmt == Format::Json) emit(suite == "all" ? reports : reports.at(0));
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, prime graphs and recognition checks for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  app.add_option("--format", format, "Output format: plain, json, or dot (prime-graph only)")
      ->check(CLI::IsMember({"plain", "json", "dot"}));

  unsigned alpha = 0, exp = 0;
  std::optional<unsigned> p;
  std::size_t cap = gkspec::kDefaultCap;
  std::string file, mu, base, suite;

  auto* sz = app.add_subcommand("sz", "Order, mu and t for Sz(2^alpha)");
  sz->add_option("--alpha", alpha, "Odd exponent, 1..45")->required();
  auto* sq = app.add_subcommand("sz-square", "Spectrum of Sz(q) x Sz(q) and its criterion witness");
  sq->add_option("--alpha", alpha, "Odd exponent, 3..45")->required();
  auto* rec = app.add_subcommand("recognize-square", "Groups isospectral to Sz(q) x Sz(q)");
  rec->add_option("--alpha", alpha, "Odd exponent, 3..45")->required();
  rec->add_option("--p", p, "Examine the twist by a field automorphism of prime order p");
  auto* spec = app.add_subcommand("spectrum", "Spectrum of a group described in a JSON file");
  spec->add_option("--group", file, "Group JSON file")->required();
  spec->add_option("--cap", cap, "Maximum number of enumerated elements");
  auto* crit = app.add_subcommand("criterion", "Search for a four-prime nonsolvability witness");
  crit->add_option("--mu", mu, "Comma-separated element orders")->required();
  auto* pg = app.add_subcommand("prime-graph", "Prime graph of a spectrum");
  pg->add_option("--mu", mu, "Comma-separated element orders")->required();
  auto* zs = app.add_subcommand("zsigmondy", "Least primitive prime divisor of base^exp - 1");
  zs->add_option("--base", base, "Base q >= 2")->required();
  zs->add_option("--exp", exp, "Exponent n >= 2")->required();
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "Suite name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = gkspec::suite_names();
        names.push_back("all");
        return names;
      }()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const Format fmt = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Plain;
    if (fmt == Format::Dot && !pg->parsed()) throw UsageError("--format dot is only valid for prime-graph");
    if (sz->parsed()) return cmd_sz(alpha, fmt);
    if (sq->parsed()) return cmd_sz_square(alpha, fmt);
    if (rec->parsed()) return cmd_recognize(alpha, p, fmt);
    if (spec->parsed()) return cmd_spectrum(file, cap, fmt);
    if (crit->parsed()) return cmd_criterion(mu, fmt);
    if (pg->parsed()) return cmd_prime_graph(mu, fmt);
    if (zs->parsed()) return cmd_zsigmondy(base, exp, fmt);
    if (ver->parsed()) return cmd_verify(suite, fmt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const gkspec::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
