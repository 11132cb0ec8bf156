// SPDX-License-Identifier: Apache-2.0
#include "runpat/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "runpat/analysis.hpp"
#include "runpat/distributions.hpp"
#include "runpat/emit.hpp"
#include "runpat/lattice.hpp"
#include "runpat/oracle.hpp"

namespace runpat {

namespace {

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    values.push_back(std::stoll(item));
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> words;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) words.push_back(Word::parse(item));
  if (words.empty()) throw std::invalid_argument("empty word list");
  return words;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_rational(item));
  return values;
}

Rational parse_probability(const std::string& text) {
  const Rational p = parse_rational(text);
  if (!is_probability(p)) throw std::domain_error("p must lie in [0,1]");
  return p;
}

OracleBudget budget_from_env() {
  OracleBudget budget;
  if (const char* env = std::getenv("RUNPAT_ORACLE_BUDGET")) budget.max_strings = std::atoll(env);
  return budget;
}

std::vector<ValueRecord> records_from_pmf(const PmfTable& table) {
  std::vector<ValueRecord> records;
  records.reserve(table.probs.size());
  for (std::size_t t = 0; t < table.probs.size(); ++t)
    records.push_back({std::to_string(t), table.probs[t]});
  return records;
}

struct Emitter {
  std::ostream* stream;
  std::ofstream file;
  std::string format = "csv";
  int digits = 7;

  void open(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream = &fallback;
      return;
    }
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    stream = &file;
  }

  void emit(const std::vector<MetaEntry>& meta, std::string_view key_cols,
            std::string_view value_prefix, const std::vector<ValueRecord>& records) {
    if (format == "json")
      *stream << render_json(meta, key_cols, value_prefix, records, digits);
    else
      write_csv(*stream, key_cols, value_prefix, records, digits);
  }
};

MetaEntry meta_num(std::string key, long long v) { return {std::move(key), std::to_string(v), true}; }
MetaEntry meta_bool(std::string key, bool v) { return {std::move(key), v ? "true" : "false", true}; }
MetaEntry meta_str(std::string key, std::string v) { return {std::move(key), std::move(v), false}; }

// ---------------------------------------------------------------- pmf ----

struct PmfOptions {
  std::string kind;
  long long n = 0;
  long long m = 0;
  long long mu = 0;
  std::string m_list;
  std::string words;
  std::string p_text = "1/2";
  std::string probs;
  long long zero_symbol = 0;
  long long t_max = -1;  // -1: full support
};

void run_pmf(const PmfOptions& opt, Emitter& emitter) {
  std::optional<long long> t_max;
  if (opt.t_max >= 0) t_max = opt.t_max;

  Rational p;
  if (!opt.probs.empty() && opt.kind != "c") {
    const auto probs = parse_rational_list(opt.probs);
    p = reduce_countable_model(probs, static_cast<std::size_t>(opt.zero_symbol)).first;
  } else {
    p = parse_probability(opt.p_text);
  }

  RunFamilySpec spec{opt.n, opt.m, opt.mu, {}, p};
  std::vector<MetaEntry> meta{meta_str("command", "pmf"), meta_str("kind", opt.kind),
                              meta_num("n", opt.n)};
  auto finish = [&](const PmfTable& table) {
    meta.push_back(meta_str("p", p.get_str()));
    if (opt.t_max >= 0) meta.push_back(meta_num("t_max", opt.t_max));
    meta.push_back(meta_num("support_max", table.support_max()));
    meta.push_back(meta_bool("truncated", table.truncated));
    emitter.emit(meta, "t", "prob", records_from_pmf(table));
  };

  if (opt.kind == "n") {
    spec.mu = 0;
    meta.push_back(meta_num("m", opt.m));
    finish(mu_overlap_pmf(spec, t_max));
  } else if (opt.kind == "m") {
    spec.mu = opt.m - 1;
    meta.push_back(meta_num("m", opt.m));
    finish(mu_overlap_pmf(spec, t_max));
  } else if (opt.kind == "mu") {
    meta.push_back(meta_num("m", opt.m));
    meta.push_back(meta_num("mu", opt.mu));
    finish(mu_overlap_pmf(spec, t_max));
  } else if (opt.kind == "g") {
    meta.push_back(meta_num("m", opt.m));
    finish(geq_run_pmf(spec, t_max));
  } else if (opt.kind == "e") {
    meta.push_back(meta_num("m", opt.m));
    finish(exact_run_pmf(spec, t_max));
  } else if (opt.kind == "d") {
    if (opt.m_list.empty()) throw std::invalid_argument("kind d needs --m-list");
    spec.m_list = parse_ll_list(opt.m_list);
    meta.push_back(meta_str("m_list", opt.m_list));
    finish(prefixed_statistic_pmf(spec, t_max));
  } else if (opt.kind == "c") {
    if (opt.words.empty()) throw std::invalid_argument("kind c needs --words");
    const auto words = parse_word_list(opt.words);
    const ProbModel model = opt.probs.empty() ? ProbModel::binary(parse_probability(opt.p_text))
                                              : ProbModel(parse_rational_list(opt.probs));
    meta.push_back(meta_str("words", opt.words));
    const IncreasingChain chain{words};
    const PmfTable table = chain_statistic_pmf(model, chain, opt.n, t_max);
    if (opt.probs.empty())
      meta.push_back(meta_str("p", p.get_str()));
    else
      meta.push_back(meta_str("probs", opt.probs));
    if (opt.t_max >= 0) meta.push_back(meta_num("t_max", opt.t_max));
    meta.push_back(meta_num("support_max", table.support_max()));
    meta.push_back(meta_bool("truncated", table.truncated));
    emitter.emit(meta, "t", "prob", records_from_pmf(table));
    return;
  } else if (opt.kind == "l") {
    // P(L_n = j) from the tail identity P(L_n < m) = P(D_{n,(m)} = 0)
    PmfTable table;
    table.truncated = false;
    table.probs.resize(static_cast<std::size_t>(opt.n) + 1);
    Rational below(0);  // P(L < j)
    for (long long j = 0; j <= opt.n; ++j) {
      RunFamilySpec tail_spec{opt.n, j + 1, 0, {}, p};
      const Rational up_to = j + 1 > opt.n ? Rational(1) : longest_run_waiting_tail(tail_spec);
      table.probs[static_cast<std::size_t>(j)] = up_to - below;
      below = up_to;
    }
    finish(table);
  } else if (opt.kind == "t") {
    // P(T_m = t) for t = 1..n via tail differences; the t = n+1 row carries
    // the censored mass P(T_m > n)
    meta.push_back(meta_num("m", opt.m));
    PmfTable table;
    table.truncated = false;
    table.probs.resize(static_cast<std::size_t>(opt.n) + 2);
    Rational prev(1);  // P(T > t-1)
    for (long long t = 1; t <= opt.n; ++t) {
      RunFamilySpec tail_spec{t, opt.m, 0, {}, p};
      const Rational tail = longest_run_waiting_tail(tail_spec);
      table.probs[static_cast<std::size_t>(t)] = prev - tail;
      prev = tail;
    }
    table.probs[static_cast<std::size_t>(opt.n) + 1] = prev;
    finish(table);
  } else {
    throw std::invalid_argument("unknown pmf kind '" + opt.kind +
                                "' (expected n, m, mu, g, e, d, c, l, or t)");
  }
}

// ---------------------------------------------------------------- joint --

void run_joint(const std::string& words_text, long long n, const std::string& p_text,
               const std::string& probs_text, Emitter& emitter) {
  const auto words = parse_word_list(words_text);
  const ProbModel model = probs_text.empty() ? ProbModel::binary(parse_probability(p_text))
                                             : ProbModel(parse_rational_list(probs_text));
  const JointPmfTable table = joint_nonoverlapping_pmf(model, words, n);
  std::vector<ValueRecord> records;
  for (const auto& [k, prob] : table.entries) {
    std::string key;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) key += '|';
      key += std::to_string(k[i]);
    }
    records.push_back({key, prob});
  }
  std::vector<MetaEntry> meta{meta_str("command", "joint"), meta_str("words", words_text),
                              meta_num("n", n), meta_bool("complete", table.complete)};
  emitter.emit(meta, "k", "prob", records);
}

// -------------------------------------------------------------- moments --

void run_moments(const std::string& w_text, long long n, long long t_high,
                 const std::string& p_text, const std::string& probs_text, Emitter& emitter) {
  const Word w = Word::parse(w_text);
  const ProbModel model = probs_text.empty() ? ProbModel::binary(parse_probability(p_text))
                                             : ProbModel(parse_rational_list(probs_text));
  std::vector<ValueRecord> records;
  for (long long t = 1; t <= t_high; ++t)
    records.push_back({std::to_string(t), moment(model, w, n, t)});
  std::vector<MetaEntry> meta{meta_str("command", "moments"), meta_str("w", w_text),
                              meta_num("n", n)};
  emitter.emit(meta, "t", "moment", records);
}

// ------------------------------------------------------------- distance --

void run_distance(long long n, const std::string& p_text, long long d, long long h, long long r,
                  const std::string& m_list_text, long long m_offset, Emitter& emitter) {
  const Rational p = parse_probability(p_text);
  const std::vector<long long> m_list =
      m_list_text.empty() ? offset_m_list(m_offset, h) : parse_ll_list(m_list_text);
  const DistanceReport report = distribution_distance(n, p, m_list, d, h, r);
  std::vector<ValueRecord> records{{"distance", report.distance}, {"bound", report.bound}};
  std::vector<MetaEntry> meta{meta_str("command", "distance"), meta_num("n", n),
                              meta_str("p", p.get_str()),      meta_num("d", d),
                              meta_num("h", h),                meta_num("r", r)};
  emitter.emit(meta, "quantity", "value", records);
}

void run_table1(Emitter& emitter) {
  const auto reports = reference_distance_table();
  std::vector<ValueRecord> records;
  for (const DistanceReport& report : reports)
    records.push_back({std::to_string(report.d), report.distance});
  std::vector<MetaEntry> meta{meta_str("command", "table1"), meta_num("n", 1000),
                              meta_str("p", "1/2"),          meta_str("m_i", "5+i"),
                              meta_num("h", 995),            meta_num("r", 40)};
  emitter.emit(meta, "d", "dist", records);
}

void run_curves(long long n, const std::string& p_text, const std::string& d_list_text,
                long long h, long long r, long long m_offset, Emitter& emitter) {
  const Rational p = parse_probability(p_text);
  const auto depths = parse_ll_list(d_list_text);
  const auto curves = depth_curves(n, p, offset_m_list(m_offset, h), depths, r);
  std::vector<ValueRecord> records;
  for (const auto& [d, table] : curves)
    for (long long t = 0; t <= table.support_max(); ++t)
      records.push_back({std::to_string(d) + "," + std::to_string(t), table.at(t)});
  std::vector<MetaEntry> meta{meta_str("command", "curves"),   meta_num("n", n),
                              meta_str("p", p.get_str()),      meta_str("m_offset", std::to_string(m_offset)),
                              meta_num("h", h),                meta_num("r", r)};
  emitter.emit(meta, "d,t", "prob", records);
}

// ---------------------------------------------------------------- bench --

void run_bench(const std::string& lengths_text, long long t, const std::string& n_list_text,
               std::ostream& out) {
  const auto lengths = parse_ll_list(lengths_text);
  const auto n_values = parse_ll_list(n_list_text);
  out << "n,d,t,points,bound,micros\n";
  for (long long n : n_values) {
    const LatticeSpec spec{n, t, lengths};
    const auto start = std::chrono::steady_clock::now();
    const Integer points = lattice_point_count(spec);
    const auto stop = std::chrono::steady_clock::now();
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start);
    out << n << ',' << lengths.size() << ',' << t << ',' << points.get_str() << ','
        << lattice_size_bound(spec).get_str() << ',' << micros.count() << '\n';
  }
}

// --------------------------------------------------------------- verify --

struct VerifyRunner {
  std::ostream& out;
  long long checks = 0;
  long long failures = 0;

  void check(bool ok, const std::string& label) {
    ++checks;
    if (!ok) ++failures;
    out << (ok ? "PASS " : "FAIL ") << label << '\n';
  }
};

bool same_pmf(const PmfTable& a, const PmfTable& b) {
  const long long hi = std::max(a.support_max(), b.support_max());
  for (long long t = 0; t <= hi; ++t)
    if (a.at(t) != b.at(t)) return false;
  return true;
}

std::string rational_label(const Rational& p) { return p.get_str(); }

int run_verify(long long max_n, std::ostream& out) {
  const OracleBudget budget = budget_from_env();
  VerifyRunner v{out};
  using Kind = StatisticSelector::Kind;

  std::vector<long long> ns;
  for (long long n = 1; n <= std::min<long long>(4, max_n); ++n) ns.push_back(n);
  for (long long n = 6; n <= max_n; n += 2) ns.push_back(n);
  if (ns.empty() || ns.back() != max_n) ns.push_back(max_n);

  const std::vector<Rational> ps{make_rational(1, 2), make_rational(1, 3)};
  for (long long n : ns) {
    for (const Rational& p : ps) {
      const ProbModel model = ProbModel::binary(p);
      const std::string tag = " n=" + std::to_string(n) + " p=" + rational_label(p);
      for (long long m = 1; m <= 3; ++m) {
        const std::string mtag = tag + " m=" + std::to_string(m);
        RunFamilySpec spec{n, m, 0, {}, p};
        v.check(same_pmf(geq_run_pmf(spec), brute_force_pmf(model, StatisticSelector::run(Kind::g_geq, m), n, budget)),
                "geq-run" + mtag);
        v.check(same_pmf(exact_run_pmf(spec), brute_force_pmf(model, StatisticSelector::run(Kind::e_exact, m), n, budget)),
                "exact-run" + mtag);
        const PmfTable longest = brute_force_pmf(model, StatisticSelector::run(Kind::l_longest, m), n, budget);
        Rational below(0);
        for (long long j = 0; j < m; ++j) below += longest.at(j);
        v.check(longest_run_waiting_tail(spec) == below, "waiting-tail" + mtag);
        for (long long mu = 0; mu < m; ++mu) {
          RunFamilySpec mu_spec{n, m, mu, {}, p};
          v.check(same_pmf(mu_overlap_pmf(mu_spec),
                           brute_force_pmf(model, StatisticSelector::run(Kind::n_mu, m, mu), n, budget)),
                  "mu-overlap" + mtag + " mu=" + std::to_string(mu));
        }
      }
      for (const auto& m_list : std::vector<std::vector<long long>>{{1, 2}, {1, 2, 3}}) {
        RunFamilySpec spec{n, 0, 0, m_list, p};
        std::string label = "prefixed" + tag + " m_list=";
        for (long long m : m_list) label += std::to_string(m) + ";";
        v.check(same_pmf(prefixed_statistic_pmf(spec),
                         brute_force_pmf(model, StatisticSelector::prefixed(m_list), n, budget)),
                label);
      }
      {
        const IncreasingChain chain = run_chain({1, 2});
        v.check(same_pmf(chain_statistic_pmf(model, chain, n),
                         brute_force_pmf(model, StatisticSelector::chain(chain.words()), n, budget)),
                "chain-run" + tag);
        const IncreasingChain mixed{{Word::parse("01"), Word::parse("011")}};
        v.check(same_pmf(chain_statistic_pmf(model, mixed, n),
                         brute_force_pmf(model, StatisticSelector::chain(mixed.words()), n, budget)),
                "chain-mixed" + tag);
      }
      {
        const std::vector<Word> single{Word::parse("01")};
        const JointPmfTable joint = joint_nonoverlapping_pmf(model, single, n);
        const JointPmfTable oracle = brute_force_joint_pmf(model, StatisticSelector::joint(single), n, budget);
        bool ok = joint.total_mass() == 1;
        for (const auto& [k, prob] : oracle.entries) ok = ok && joint.at(k) == prob;
        v.check(ok, "joint-single" + tag);

        bool moments_ok = true;
        for (long long t = 1; t <= 3; ++t) {
          Rational from_oracle(0);
          for (const auto& [k, prob] : oracle.entries)
            from_oracle += rational_pow(Rational(static_cast<long>(k[0])), t) * prob;
          moments_ok = moments_ok && moment(model, single[0], n, t) == from_oracle;
        }
        v.check(moments_ok, "moments" + tag);
      }
      if (n >= 5) {
        const std::vector<Word> pair{Word::parse("00111"), Word::parse("00101")};
        const JointPmfTable joint = joint_nonoverlapping_pmf(model, pair, n);
        const JointPmfTable oracle = brute_force_joint_pmf(model, StatisticSelector::joint(pair), n, budget);
        bool ok = joint.total_mass() == 1;
        for (const auto& [k, prob] : oracle.entries) ok = ok && joint.at(k) == prob;
        v.check(ok, "joint-pair" + tag);
      }
    }
  }

  // countable-alphabet reduction: runs of the distinguished symbol in a
  // ternary model match the binary formulas at p = q_0
  {
    const std::vector<Rational> ternary{make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)};
    const auto [p0, q0] = reduce_countable_model(ternary, 0);
    const ProbModel model{ternary};
    for (long long n = 1; n <= std::min<long long>(max_n, 8); ++n) {
      RunFamilySpec spec{n, 2, 0, {}, p0};
      const bool ok =
          same_pmf(mu_overlap_pmf(spec),
                   brute_force_pmf(model, StatisticSelector::run(Kind::n_mu, 2, 0), n, budget)) &&
          same_pmf(geq_run_pmf(spec),
                   brute_force_pmf(model, StatisticSelector::run(Kind::g_geq, 2), n, budget));
      v.check(ok, "countable-reduction n=" + std::to_string(n) + " q0=" + rational_label(p0) +
                      " (q=" + rational_label(q0) + ")");
    }
  }

  // binomial-transform identity between the allocation weight and the oracle
  // joint distribution
  {
    const ProbModel model = ProbModel::binary(make_rational(1, 2));
    const std::vector<Word> words{Word::parse("01")};
    const long long n = std::min<long long>(max_n, 8);
    const JointPmfTable oracle = brute_force_joint_pmf(model, StatisticSelector::joint(words), n, budget);
    bool ok = true;
    for (long long k = 0; k * 2 <= n; ++k) {
      Rational rhs(0);
      for (const auto& [tvec, prob] : oracle.entries)
        rhs += prob * Rational(binomial(tvec[0], k));
      const std::vector<long long> kv{k};
      ok = ok && allocation_weight(model, words, n, kv) == rhs;
    }
    v.check(ok, "allocation-transform n=" + std::to_string(n));
  }

  out << "verify: " << v.checks << " checks, " << v.failures << " failures\n";
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact distributions of runs and pattern occurrences in i.i.d. sequences"};
  app.require_subcommand(1);
  // --h is a real option of distance/curves, so help is long-form only
  app.set_help_flag("--help", "print help and exit");

  std::string out_path;
  app.add_option("--out", out_path, "write records to this file instead of stdout");

  Emitter emitter;

  PmfOptions pmf_opt;
  CLI::App* pmf = app.add_subcommand("pmf", "exact pmf of a run/pattern statistic");
  pmf->add_option("kind", pmf_opt.kind,
                  "statistic: n (nonoverlapping), m (overlapping), mu, g (>=m), e (=m), "
                  "d (m-list), c (word chain), l (longest run), t (waiting time)")
      ->required();
  pmf->add_option("--n", pmf_opt.n, "sample size")->required();
  pmf->add_option("--m", pmf_opt.m, "run length");
  pmf->add_option("--mu", pmf_opt.mu, "overlap parameter");
  pmf->add_option("--m-list", pmf_opt.m_list, "comma-separated run lengths m_1<m_2<...");
  pmf->add_option("--words", pmf_opt.words, "comma-separated chain words, e.g. 10,100");
  pmf->add_option("--p", pmf_opt.p_text, "P(symbol 0), as a/b or decimal");
  pmf->add_option("--probs", pmf_opt.probs, "full symbol distribution, comma-separated");
  pmf->add_option("--zero-symbol", pmf_opt.zero_symbol, "distinguished symbol for --probs");
  pmf->add_option("--t-max", pmf_opt.t_max, "largest statistic value to compute");
  pmf->add_option("--format", emitter.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  pmf->add_option("--digits", emitter.digits, "significant digits for decimals");

  std::string joint_words;
  long long joint_n = 0;
  std::string joint_p = "1/2";
  std::string joint_probs;
  CLI::App* joint = app.add_subcommand("joint", "joint pmf of a nonoverlapping word set");
  joint->add_option("--words", joint_words, "comma-separated words")->required();
  joint->add_option("--n", joint_n, "sample size")->required();
  joint->add_option("--p", joint_p, "P(symbol 0) for the binary model");
  joint->add_option("--probs", joint_probs, "full symbol distribution");
  joint->add_option("--format", emitter.format)->check(CLI::IsMember({"csv", "json"}));
  joint->add_option("--digits", emitter.digits);

  std::string moments_w;
  long long moments_n = 0, moments_t = 1;
  std::string moments_p = "1/2";
  std::string moments_probs;
  CLI::App* moments = app.add_subcommand("moments", "moments E(N^t) of a word count");
  moments->add_option("--w", moments_w, "the word")->required();
  moments->add_option("--n", moments_n, "sample size")->required();
  moments->add_option("--t", moments_t, "highest moment order");
  moments->add_option("--p", moments_p, "P(symbol 0)");
  moments->add_option("--probs", moments_probs, "full symbol distribution");
  moments->add_option("--format", emitter.format)->check(CLI::IsMember({"csv", "json"}));
  moments->add_option("--digits", emitter.digits);

  long long dist_n = 0, dist_d = 0, dist_h = 0, dist_r = 0, dist_offset = 5;
  std::string dist_p = "1/2", dist_m_list;
  CLI::App* distance = app.add_subcommand("distance", "sup-distance between truncation depths");
  distance->add_option("--n", dist_n)->required();
  distance->add_option("--p", dist_p);
  distance->add_option("--d", dist_d, "truncation depth")->required();
  distance->add_option("--h", dist_h, "reference depth")->required();
  distance->add_option("--r", dist_r, "value-range cap")->required();
  distance->add_option("--m-list", dist_m_list, "explicit m-list (default m_i = offset + i)");
  distance->add_option("--m-offset", dist_offset, "offset for the default m-list");
  distance->add_option("--format", emitter.format)->check(CLI::IsMember({"csv", "json"}));
  distance->add_option("--digits", emitter.digits);

  CLI::App* table1 = app.add_subcommand(
      "table1", "truncation distances at n=1000, p=1/2, m_i=5+i, d in {1,3,5,7,9}");
  table1->add_option("--format", emitter.format)->check(CLI::IsMember({"csv", "json"}));
  table1->add_option("--digits", emitter.digits);

  long long curves_n = 1000, curves_h = 995, curves_r = 40, curves_offset = 5;
  std::string curves_p = "1/2", curves_d_list = "1,2,3,995";
  CLI::App* curves = app.add_subcommand("curves", "depth-indexed pmf curve data");
  curves->add_option("--n", curves_n);
  curves->add_option("--p", curves_p);
  curves->add_option("--d-list", curves_d_list, "depths to emit");
  curves->add_option("--h", curves_h, "m-list length");
  curves->add_option("--r", curves_r, "largest t");
  curves->add_option("--m-offset", curves_offset);
  curves->add_option("--format", emitter.format)->check(CLI::IsMember({"csv", "json"}));
  curves->add_option("--digits", emitter.digits);

  long long verify_max_n = 12;
  CLI::App* verify = app.add_subcommand("verify", "oracle-vs-formula equivalence checks");
  verify->add_option("--max-n", verify_max_n, "largest sample size");

  std::string bench_lengths = "2,3", bench_n_list = "250,500,1000,2000,4000";
  long long bench_t = 8;
  CLI::App* bench = app.add_subcommand("bench", "lattice sizes and timings vs the size bound");
  bench->add_option("--lengths", bench_lengths, "word lengths");
  bench->add_option("--t", bench_t, "value-range cap");
  bench->add_option("--n-list", bench_n_list, "sample sizes");

  std::vector<std::string> argv_storage{"runpat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    emitter.open(out_path, out);
    if (pmf->parsed()) {
      run_pmf(pmf_opt, emitter);
    } else if (joint->parsed()) {
      run_joint(joint_words, joint_n, joint_p, joint_probs, emitter);
    } else if (moments->parsed()) {
      run_moments(moments_w, moments_n, moments_t, moments_p, moments_probs, emitter);
    } else if (distance->parsed()) {
      run_distance(dist_n, dist_p, dist_d, dist_h, dist_r, dist_m_list, dist_offset, emitter);
    } else if (table1->parsed()) {
      run_table1(emitter);
    } else if (curves->parsed()) {
      run_curves(curves_n, curves_p, curves_d_list, curves_h, curves_r, curves_offset, emitter);
    } else if (verify->parsed()) {
      return run_verify(verify_max_n, *emitter.stream);
    } else if (bench->parsed()) {
      run_bench(bench_lengths, bench_t, bench_n_list, *emitter.stream);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace runpat
