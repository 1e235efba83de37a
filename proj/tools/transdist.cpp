// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The transdist Authors.

// Command-line front end for the transdist library.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "transdist/closeness.hpp"
#include "transdist/io.hpp"
#include "transdist/kapprox.hpp"
#include "transdist/metrics.hpp"
#include "transdist/relations.hpp"
#include "transdist/transducer.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace transdist;

constexpr int kExitDecisive = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInternal = 3;

struct Options {
  bool json = false;
  std::string metric = "levenshtein";
  std::uint64_t k = 0;
  std::size_t max_len = 8;
  std::size_t threads = 0;
  std::size_t max_index = 8;
  bool assert_metrizable = false;
  std::string unit_sphere;
  std::vector<std::string> files;
  std::vector<std::string> words;
  std::string file;
  std::string word;
};

// Collects a plain-text and a JSON rendering of one result.
class Report {
 public:
  explicit Report(bool as_json) : as_json_(as_json) {}
  void line(const std::string& s) { text_ += s + "\n"; }
  json& data() { return data_; }
  void print() const {
    if (as_json_) {
      std::cout << data_.dump(2) << "\n";
    } else {
      std::cout << text_;
    }
  }

 private:
  bool as_json_;
  std::string text_;
  json data_ = json::object();
};

std::string q(const Word& w) { return quote_word(w); }

json certificate_json(const PumpCertificate& c) {
  return json{{"prefix", to_utf8(c.prefix)},
              {"loop", to_utf8(c.loop)},
              {"suffix", to_utf8(c.suffix)}};
}

void certificate_lines(Report& r, const PumpCertificate& c) {
  if (c.loop.empty()) {
    r.line("input: " + q(c.instance(0)));
    return;
  }
  r.line("prefix: " + q(c.prefix));
  r.line("loop: " + q(c.loop));
  r.line("suffix: " + q(c.suffix));
}

int verdict_exit(Verdict v) {
  return v == Verdict::kUnknown ? kExitUnknown : kExitDecisive;
}

void report_closeness(Report& r, const Closeness& c) {
  r.line(std::string(verdict_name(c.verdict)));
  r.data()["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::kClose && c.bound.is_finite()) {
    r.line("bound: " + c.bound.to_string());
    r.data()["bound"] = c.bound.value();
  }
  if (c.certificate) {
    certificate_lines(r, *c.certificate);
    r.data()["certificate"] = certificate_json(*c.certificate);
  }
  if (!c.diagnostic.empty()) {
    r.line("reason: " + c.diagnostic);
    r.data()["reason"] = c.diagnostic;
  }
}

int cmd_eval(const Options& o, Report& r) {
  const Transducer t = load_transducer(o.file);
  const Word w = from_utf8(o.word);
  const auto out = eval(t, w);
  r.line(out ? q(*out) : "undefined");
  r.data()["input"] = o.word;
  r.data()["output"] = out ? json(to_utf8(*out)) : json(nullptr);
  return kExitDecisive;
}

int cmd_worddist(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const ExtendedNat d =
      word_distance(m, from_utf8(o.words.at(0)), from_utf8(o.words.at(1)));
  r.line(d.to_string());
  r.data()["metric"] = metric_name(m);
  r.data()["distance"] = d.to_string();
  return kExitDecisive;
}

int cmd_close(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const Closeness c = decide_closeness(m, load_transducer(o.files.at(0)),
                                       load_transducer(o.files.at(1)));
  r.data()["metric"] = metric_name(m);
  report_closeness(r, c);
  return verdict_exit(c.verdict);
}

int cmd_kclose(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const KCloseResult k = kclose_check(m, load_transducer(o.files.at(0)),
                                      load_transducer(o.files.at(1)), o.k);
  r.line(k.close ? "YES" : "NO");
  r.data()["metric"] = metric_name(m);
  r.data()["k"] = o.k;
  r.data()["kclose"] = k.close;
  if (k.counterexample) {
    r.line("counterexample: " + q(*k.counterexample));
    r.data()["counterexample"] = to_utf8(*k.counterexample);
  }
  return kExitDecisive;
}

void report_distance(Report& r, const DistanceResult& d) {
  r.line(d.to_string());
  r.data()["distance"] = d.to_string();
  if (d.witness) {
    r.line("witness: " + q(*d.witness));
    r.data()["witness"] = to_utf8(*d.witness);
  }
  if (d.value.is_infinite() || d.unknown()) {
    if (d.closeness.certificate) {
      certificate_lines(r, *d.closeness.certificate);
      r.data()["certificate"] = certificate_json(*d.closeness.certificate);
    }
    if (!d.reason().empty()) {
      r.line("reason: " + d.reason());
      r.data()["reason"] = d.reason();
    }
  }
}

int cmd_distance(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const DistanceResult d = distance(m, load_transducer(o.files.at(0)),
                                    load_transducer(o.files.at(1)));
  r.data()["metric"] = metric_name(m);
  report_distance(r, d);
  return verdict_exit(d.verdict);
}

int cmd_diameter(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const DiameterResult d = diameter(load_relation(o.file), m);
  r.data()["metric"] = metric_name(m);
  r.line(d.distance.to_string());
  r.data()["diameter"] = d.distance.to_string();
  if (d.witness) {
    r.line("pair: " + q(d.witness->first) + " " + q(d.witness->second));
    r.data()["pair"] = {to_utf8(d.witness->first), to_utf8(d.witness->second)};
  }
  if (!d.distance.reason().empty() && d.distance.verdict != Verdict::kClose) {
    r.line("reason: " + d.distance.reason());
    r.data()["reason"] = d.distance.reason();
  }
  return verdict_exit(d.distance.verdict);
}

int cmd_index(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const RationalRelation rel = load_relation(o.files.at(0));
  RationalRelation s;
  if (!o.unit_sphere.empty()) {
    if (o.files.size() > 1) {
      throw InputError("index: give either a second relation or --unit-sphere");
    }
    const MetricId u = parse_metric(o.unit_sphere);
    if (u != m) throw InputError("index: --unit-sphere and --metric differ");
    s = make_distance_relation(u, rel.left_alphabet.merged(rel.right_alphabet));
  } else if (o.files.size() == 2) {
    s = load_relation(o.files.at(1));
  } else {
    throw InputError("index: a second relation or --unit-sphere is required");
  }
  IndexOptions opt;
  opt.assert_metrizable = o.assert_metrizable;
  opt.max_index = o.max_index;
  const IndexResult res = index(rel, s, m, opt);
  r.line(res.to_string());
  r.data()["metric"] = metric_name(m);
  r.data()["index"] = res.to_string();
  r.data()["diameter"] = res.diameter.distance.to_string();
  if (res.experimental) {
    r.line("note: index over the length metric is experimental");
    r.data()["experimental"] = true;
  }
  if (!res.diagnostic.empty() && res.verdict != Verdict::kClose) {
    r.line("reason: " + res.diagnostic);
    r.data()["reason"] = res.diagnostic;
  }
  return verdict_exit(res.verdict);
}

// Maximum output distance over the inputs of each length.
int cmd_oracle(const Options& o, Report& r) {
  const MetricId m = parse_metric(o.metric);
  const Transducer t1 = load_transducer(o.files.at(0));
  const Transducer t2 = load_transducer(o.files.at(1));
  const Alphabet in = t1.in_alphabet().merged(t2.in_alphabet());
  const std::size_t threads =
      o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  r.data()["metric"] = metric_name(m);
  json rows = json::array();
  r.line("length max argmax");
  for (std::size_t len = 0; len <= o.max_len; ++len) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= in.size();
    struct Best {
      bool any = false;
      ExtendedNat value = 0;
      Word input;
    };
    std::vector<Best> best(threads);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](std::size_t id) {
      for (std::uint64_t n; (n = next.fetch_add(1)) < total;) {
        Word w(len, 0);
        for (std::size_t i = len; i-- > 0; n /= in.size()) w[i] = in[n % in.size()];
        const auto a = eval(t1, w);
        const auto b = eval(t2, w);
        if (!a && !b) continue;
        const ExtendedNat d =
            a && b ? word_distance(m, *a, *b) : ExtendedNat::infinity();
        Best& x = best[id];
        // Ties go to the shortlex-least input, so the table is deterministic.
        if (!x.any || d > x.value || (d == x.value && w < x.input)) {
          x = Best{true, d, w};
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
    Best all;
    for (const Best& x : best) {
      if (!x.any) continue;
      if (!all.any || x.value > all.value ||
          (x.value == all.value && x.input < all.input)) {
        all = x;
      }
    }
    if (!all.any) {
      r.line(std::to_string(len) + " - -");
      rows.push_back(json{{"length", len}, {"max", nullptr}});
      continue;
    }
    r.line(std::to_string(len) + " " + all.value.to_string() + " " + q(all.input));
    rows.push_back(json{{"length", len},
                        {"max", all.value.to_string()},
                        {"input", to_utf8(all.input)}});
  }
  r.data()["rows"] = rows;
  return kExitDecisive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances between finite-state transducers"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::size_t> ceiling;
  app.add_flag("--json", o.json, "Print results as JSON");
  app.add_option("--state-ceiling", ceiling,
                 "Largest number of states any construction may create");

  const std::string metrics =
      "hamming|transposition|conjugacy|levenshtein|lcs|damerau|length|discrete";
  auto metric = [&](CLI::App* c) {
    c->add_option("-m,--metric", o.metric, metrics)->required();
  };
  auto two_files = [&](CLI::App* c) {
    c->add_option("files", o.files, "Transducer files")->required()->expected(2);
  };

  auto* eval_cmd = app.add_subcommand("eval", "Output of a transducer on a word");
  eval_cmd->add_option("file", o.file, "Transducer file")->required();
  eval_cmd->add_option("word", o.word, "Input word (use \"\" for the empty word)")
      ->required();

  auto* worddist = app.add_subcommand("worddist", "Distance between two words");
  metric(worddist);
  worddist->add_option("words", o.words, "Two words")->required()->expected(2);

  auto* close = app.add_subcommand("close", "Decide closeness of two transducers");
  metric(close);
  two_files(close);

  auto* kclose_cmd = app.add_subcommand("kclose", "Decide k-closeness");
  metric(kclose_cmd);
  kclose_cmd->add_option("-k", o.k, "Distance bound")->required();
  two_files(kclose_cmd);

  auto* dist = app.add_subcommand("distance", "Distance between two transducers");
  metric(dist);
  two_files(dist);

  auto* diam = app.add_subcommand("diameter", "Diameter of a rational relation");
  metric(diam);
  diam->add_option("file", o.file, "Relation file")->required();

  auto* idx = app.add_subcommand("index", "Index of a relation in a closure");
  metric(idx);
  idx->add_option("files", o.files, "Relation file and generator file")
      ->required()
      ->expected(1, 2);
  idx->add_option("--unit-sphere", o.unit_sphere,
                  "Use the unit sphere of this metric as generator");
  idx->add_flag("--assert-metrizable", o.assert_metrizable,
                "Declare the generator metrizable for --metric");
  idx->add_option("--max-index", o.max_index, "Search bound beyond the diameter");

  auto* oracle = app.add_subcommand("oracle", "Brute-force distance per input length");
  metric(oracle);
  two_files(oracle);
  oracle->add_option("--max-len", o.max_len, "Longest input");
  oracle->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  CLI11_PARSE(app, argc, argv);
  if (ceiling) set_state_ceiling(*ceiling);

  Report report(o.json);
  int code = kExitDecisive;
  try {
    if (*eval_cmd) code = cmd_eval(o, report);
    if (*worddist) code = cmd_worddist(o, report);
    if (*close) code = cmd_close(o, report);
    if (*kclose_cmd) code = cmd_kclose(o, report);
    if (*dist) code = cmd_distance(o, report);
    if (*diam) code = cmd_diameter(o, report);
    if (*idx) code = cmd_index(o, report);
    if (*oracle) code = cmd_oracle(o, report);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    std::cout << (o.json ? "{\"verdict\": \"UNKNOWN\"}" : "UNKNOWN") << "\n";
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  report.print();
  return code;
}
