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

#include "transdist/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace transdist {

ParseError::ParseError(const std::string& source, std::size_t line,
                       std::size_t column, const std::string& message)
    : InputError(source + ":" + std::to_string(line) + ":" +
                 std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Directive {
  std::string key;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<Token> args;
};

class Reader {
 public:
  Reader(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  std::vector<Directive> directives() {
    std::vector<Directive> out;
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      if (auto d = parse_line(text_.substr(start, end - start), line)) {
        out.push_back(std::move(*d));
      }
      start = end + 1;
      ++line;
    }
    return out;
  }

  [[noreturn]] void fail(std::size_t line, std::size_t column,
                         const std::string& msg) const {
    throw ParseError(source_, line, column, msg);
  }

 private:
  std::optional<Directive> parse_line(std::string_view s, std::size_t line) {
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_space();
    if (i == s.size() || s[i] == '#') return std::nullopt;
    Directive d;
    d.line = line;
    d.column = i + 1;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_')) {
      d.key.push_back(s[i++]);
    }
    if (d.key.empty() || i == s.size() || s[i] != ':') {
      fail(line, i + 1, "expected a directive of the form 'key: ...'");
    }
    ++i;
    while (true) {
      skip_space();
      if (i == s.size() || s[i] == '#') break;
      Token t;
      t.column = i + 1;
      if (s[i] == '"') {
        ++i;
        bool closed = false;
        while (i < s.size()) {
          const char c = s[i++];
          if (c == '"') {
            closed = true;
            break;
          }
          if (c == '\\') {
            if (i == s.size() || (s[i] != '"' && s[i] != '\\')) {
              fail(line, i, "unknown escape in quoted word");
            }
            t.text.push_back(s[i++]);
          } else {
            t.text.push_back(c);
          }
        }
        if (!closed) fail(line, t.column, "unterminated quoted word");
      } else {
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               s[i] != '#') {
          if (s[i] == '"') fail(line, i + 1, "quote inside a bare word");
          t.text.push_back(s[i++]);
        }
      }
      d.args.push_back(std::move(t));
    }
    return d;
  }

  std::string_view text_;
  std::string source_;
};

// Fields shared by transducer and relation files.
struct Document {
  bool relation = false;
  Alphabet in, out;
  std::map<std::string, StateId> states;
  std::vector<std::string> state_names;
  std::vector<const Directive*> initial, finals, transitions;
  std::vector<Directive> all;
};

class Builder {
 public:
  Builder(std::string_view text, const std::string& source)
      : reader_(text, source) {}

  Document read(bool want_relation) {
    Document doc;
    doc.all = reader_.directives();
    bool seen_in = false, seen_out = false, seen_states = false;
    for (const Directive& d : doc.all) {
      if (d.key == "kind") {
        expect_args(d, 1);
        if (d.args[0].text == "relation") {
          doc.relation = true;
        } else if (d.args[0].text != "transducer") {
          reader_.fail(d.line, d.args[0].column,
                       "kind must be 'transducer' or 'relation'");
        }
      } else if (d.key == "alphabet_in" || d.key == "alphabet_out") {
        std::vector<Letter> letters;
        for (const Token& t : d.args) letters.push_back(letter(d, t));
        (d.key == "alphabet_in" ? doc.in : doc.out) = Alphabet(letters);
        (d.key == "alphabet_in" ? seen_in : seen_out) = true;
      } else if (d.key == "states") {
        seen_states = true;
        for (const Token& t : d.args) {
          if (doc.states.count(t.text)) {
            reader_.fail(d.line, t.column, "state '" + t.text + "' declared twice");
          }
          doc.states.emplace(t.text, static_cast<StateId>(doc.state_names.size()));
          doc.state_names.push_back(t.text);
        }
      } else if (d.key == "initial") {
        doc.initial.push_back(&d);
      } else if (d.key == "final") {
        doc.finals.push_back(&d);
      } else if (d.key == "transition") {
        doc.transitions.push_back(&d);
      } else {
        reader_.fail(d.line, d.column, "unknown directive '" + d.key + "'");
      }
    }
    const std::size_t last = doc.all.empty() ? 1 : doc.all.back().line;
    if (doc.relation != want_relation) {
      reader_.fail(1, 1, want_relation ? "expected 'kind: relation'"
                                       : "expected a transducer, found a relation");
    }
    if (!seen_in) reader_.fail(last, 1, "missing alphabet_in");
    if (!seen_out) reader_.fail(last, 1, "missing alphabet_out");
    if (!seen_states) reader_.fail(last, 1, "missing states");
    return doc;
  }

  void expect_args(const Directive& d, std::size_t n) const {
    if (d.args.size() != n) {
      reader_.fail(d.line, d.column,
                   "'" + d.key + "' expects " + std::to_string(n) +
                       " argument(s), found " + std::to_string(d.args.size()));
    }
  }

  Word word(const Directive& d, const Token& t, const Alphabet& a) const {
    Word w;
    try {
      w = from_utf8(t.text);
    } catch (const InputError& e) {
      reader_.fail(d.line, t.column, e.what());
    }
    for (Letter c : w) {
      if (!a.contains(c)) {
        reader_.fail(d.line, t.column,
                     "letter '" + to_utf8(c) + "' is not in the alphabet");
      }
    }
    return w;
  }

  Letter letter(const Directive& d, const Token& t) const {
    Word w;
    try {
      w = from_utf8(t.text);
    } catch (const InputError& e) {
      reader_.fail(d.line, t.column, e.what());
    }
    if (w.size() != 1) reader_.fail(d.line, t.column, "expected a single letter");
    if (w[0] == kPadLetter || w[0] >= 0xF0000) {
      reader_.fail(d.line, t.column, "letter is reserved");
    }
    return w[0];
  }

  StateId state(const Document& doc, const Directive& d, const Token& t) const {
    auto it = doc.states.find(t.text);
    if (it == doc.states.end()) {
      reader_.fail(d.line, t.column, "undeclared state '" + t.text + "'");
    }
    return it->second;
  }

  const Reader& reader() const { return reader_; }

 private:
  Reader reader_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool needs_quotes(std::u32string_view w) {
  if (w.empty()) return true;
  for (Letter c : w) {
    if (c == U'"' || c == U'#' || c == U'\\' || c == U' ' || c == U'\t' ||
        c == U'\n' || c == U'\r') {
      return true;
    }
  }
  return false;
}

void write_header(std::ostringstream& os, const char* kind, const Alphabet& in,
                  const Alphabet& out, std::size_t states) {
  os << "kind: " << kind << "\n";
  os << "alphabet_in:";
  for (Letter a : in) os << ' ' << quote_word(Word(1, a));
  os << "\nalphabet_out:";
  for (Letter a : out) os << ' ' << quote_word(Word(1, a));
  os << "\nstates:";
  for (std::size_t s = 0; s < states; ++s) os << " q" << s;
  os << "\n";
}

}  // namespace

std::string quote_word(std::u32string_view w) {
  if (!needs_quotes(w)) return to_utf8(w);
  std::string s = "\"";
  for (Letter c : w) {
    if (c == U'"' || c == U'\\') s.push_back('\\');
    s += to_utf8(c);
  }
  return s + "\"";
}

Transducer parse_transducer(std::string_view text, const std::string& source) {
  Builder b(text, source);
  const Document doc = b.read(false);
  Transducer t(doc.in, doc.out);
  for (std::size_t i = 0; i < doc.state_names.size(); ++i) t.add_state();
  for (const Directive* d : doc.initial) {
    for (const Token& tok : d->args) t.add_initial(b.state(doc, *d, tok));
  }
  for (const Directive* d : doc.finals) {
    if (d->args.empty() || d->args.size() > 2) {
      b.reader().fail(d->line, d->column, "'final' expects a state and an optional output");
    }
    const StateId s = b.state(doc, *d, d->args[0]);
    t.set_final(s, d->args.size() == 2 ? b.word(*d, d->args[1], doc.out) : Word());
  }
  for (const Directive* d : doc.transitions) {
    b.expect_args(*d, 4);
    const StateId src = b.state(doc, *d, d->args[0]);
    const Letter a = b.letter(*d, d->args[1]);
    if (!doc.in.contains(a)) {
      b.reader().fail(d->line, d->args[1].column,
                      "letter '" + to_utf8(a) + "' is not in alphabet_in");
    }
    const Word out = b.word(*d, d->args[2], doc.out);
    t.add_transition(src, a, out, b.state(doc, *d, d->args[3]));
  }
  t.validate();
  return t;
}

RationalRelation parse_relation(std::string_view text, const std::string& source) {
  Builder b(text, source);
  const Document doc = b.read(true);
  PairAutomaton p;
  for (std::size_t i = 0; i < doc.state_names.size(); ++i) p.add_state();
  for (const Directive* d : doc.initial) {
    for (const Token& tok : d->args) p.add_initial(b.state(doc, *d, tok));
  }
  for (const Directive* d : doc.finals) {
    for (const Token& tok : d->args) p.set_final(b.state(doc, *d, tok));
  }
  for (const Directive* d : doc.transitions) {
    b.expect_args(*d, 4);
    PairLabel l{b.word(*d, d->args[1], doc.in), b.word(*d, d->args[2], doc.out), {}};
    p.add_edge(b.state(doc, *d, d->args[0]), std::move(l),
               b.state(doc, *d, d->args[3]));
  }
  return make_relation(p, doc.in, doc.out);
}

Transducer load_transducer(const std::string& path) {
  return parse_transducer(read_file(path), path);
}

RationalRelation load_relation(const std::string& path) {
  return parse_relation(read_file(path), path);
}

std::string write_transducer(const Transducer& t) {
  std::ostringstream os;
  write_header(os, "transducer", t.in_alphabet(), t.out_alphabet(), t.num_states());
  const Automaton& a = t.automaton();
  os << "initial:";
  for (StateId s : a.initial()) os << " q" << s;
  os << "\n";
  for (StateId s : a.finals()) {
    os << "final: q" << s << ' ' << quote_word(t.final_output(s)) << "\n";
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e) {
    const auto& ed = a.edge(e);
    os << "transition: q" << ed.src << ' ' << quote_word(Word(1, ed.label)) << ' '
       << quote_word(t.output(e)) << " q" << ed.dst << "\n";
  }
  return os.str();
}

std::string write_relation(const RationalRelation& r) {
  std::ostringstream os;
  const PairAutomaton& p = r.pairs;
  write_header(os, "relation", r.left_alphabet, r.right_alphabet, p.num_states());
  os << "initial:";
  for (StateId s : p.initial()) os << " q" << s;
  os << "\n";
  if (!p.finals().empty()) {
    os << "final:";
    for (StateId s : p.finals()) os << " q" << s;
    os << "\n";
  }
  for (const auto& e : p.edges()) {
    os << "transition: q" << e.src << ' ' << quote_word(e.label.left) << ' '
       << quote_word(e.label.right) << " q" << e.dst << "\n";
  }
  return os.str();
}

}  // namespace transdist
