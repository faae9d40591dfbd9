#include "heegaard/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "heegaard/error.hpp"

namespace heegaard {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

constexpr std::string_view kMagic = "heegaard-diagram";

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

struct Entry {
  Token name;
  std::vector<Token> tokens;
};

struct Section {
  int line = 0;  // header line
  std::vector<Entry> entries;
};

bool is_name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<Token> split_tokens(const std::string& line, int line_no, std::size_t from) {
  std::vector<Token> out;
  std::size_t k = from;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back(Token{line.substr(start, k - start), line_no, static_cast<int>(start) + 1});
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

struct RawFile {
  int version = 0;
  std::optional<int> genus;
  std::string name;
  std::string manifold;
  std::optional<bool> irreducible;
  std::map<std::string, Section> sections;
  int last_line = 0;
};

RawFile read_raw(std::string_view text) {
  RawFile raw;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  raw.last_line = static_cast<int>(lines.size());
  Section* current = nullptr;
  bool have_magic = false;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k) + 1;
    std::string line = lines[k];
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto first = line.find_first_not_of(" \t");
    const Token head{line.substr(first, line.find_first_of(" \t", first) - first), line_no,
                     static_cast<int>(first) + 1};
    if (!have_magic) {
      const auto toks = split_tokens(line, line_no, 0);
      if (toks[0].text != kMagic) fail(toks[0], "expected 'heegaard-diagram <version>' header");
      if (toks.size() != 2) fail(toks[0], "header takes exactly one version number");
      const auto v = parse_int(toks[1].text);
      if (!v || *v != 1) fail(toks[1], "unsupported format version '" + toks[1].text + "'");
      raw.version = *v;
      have_magic = true;
      continue;
    }
    if (head.text.front() == '[') {
      const std::string t = trim(line);
      if (t.back() != ']') fail(head, "unterminated section header");
      const std::string sec = t.substr(1, t.size() - 2);
      static const std::vector<std::string> known{"pants", "curves", "strands", "orders", "aux"};
      if (std::find(known.begin(), known.end(), sec) == known.end()) {
        fail(head, "unknown section [" + sec + "]");
      }
      if (raw.sections.count(sec)) fail(head, "section [" + sec + "] appears twice");
      current = &raw.sections[sec];
      current->line = line_no;
      continue;
    }
    if (!current) {
      const std::string rest = trim(line.substr(first + head.text.size()));
      const Token value{rest, line_no, static_cast<int>(line.find(rest, first + head.text.size())) + 1};
      if (head.text == "genus") {
        const auto g = parse_int(rest);
        if (!g) fail(value, "genus must be a positive integer");
        if (raw.genus) fail(head, "genus given twice");
        raw.genus = *g;
      } else if (head.text == "name" || head.text == "manifold") {
        if (rest.empty()) fail(head, head.text + " needs a value");
        (head.text == "name" ? raw.name : raw.manifold) = rest;
      } else if (head.text == "irreducible") {
        if (rest != "yes" && rest != "no") fail(value, "irreducible must be 'yes' or 'no'");
        raw.irreducible = rest == "yes";
      } else {
        fail(head, "unknown header key '" + head.text + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(head, "expected '<name> = ...'");
    const auto name_toks = split_tokens(line.substr(0, eq), line_no, 0);
    if (name_toks.size() != 1) fail(head, "expected a single name before '='");
    current->entries.push_back(Entry{name_toks[0], split_tokens(line, line_no, eq + 1)});
  }
  if (!have_magic) throw ParseError(1, 1, "empty file; expected 'heegaard-diagram 1' header");
  return raw;
}

const Section& require(const RawFile& raw, const std::string& sec) {
  const auto it = raw.sections.find(sec);
  if (it == raw.sections.end()) {
    throw ParseError(raw.last_line + 1, 1, "missing section [" + sec + "] (truncated file?)");
  }
  return it->second;
}

int parse_cuff(const Token& t, std::string_view text, int n) {
  const auto v = parse_int(text);
  if (!v || *v < 1 || *v > n) {
    fail(t, "'" + std::string(text) + "' is not a cuff id (1.." + std::to_string(n) + ")");
  }
  return *v - 1;
}

Side parse_side(const Token& t) {
  const char c = t.text.back();
  if (c != '+' && c != '-') fail(t, "expected a side '+' or '-' after '" + t.text + "'");
  return c == '+' ? Side::Plus : Side::Minus;
}

void check_count(const Section& s, std::size_t expected, const std::string& what, const RawFile& raw) {
  if (s.entries.size() == expected) return;
  const int line = s.entries.empty() ? s.line : s.entries.back().name.line;
  const bool short_count = s.entries.size() < expected;
  throw ParseError(short_count ? raw.last_line + 1 : line, 1,
                   "expected " + std::to_string(expected) + " " + what + ", found " +
                       std::to_string(s.entries.size()) + (short_count ? " (truncated file?)" : ""));
}

PantsDecomposition parse_pants(const RawFile& raw, int genus) {
  const Section& sec = require(raw, "pants");
  const int n = 3 * genus - 3;
  check_count(sec, at(2 * genus - 2), "pants lines", raw);
  std::vector<SlotGluing> gluing;
  std::vector<std::string> names;
  for (std::size_t p = 0; p < sec.entries.size(); ++p) {
    const Entry& e = sec.entries[p];
    if (!std::all_of(e.name.text.begin(), e.name.text.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      fail(e.name, "invalid pants name '" + e.name.text + "'");
    }
    if (std::find(names.begin(), names.end(), e.name.text) != names.end()) {
      fail(e.name, "duplicate pants name '" + e.name.text + "'");
    }
    names.push_back(e.name.text);
    if (e.tokens.size() != 3) {
      fail(e.tokens.empty() ? e.name : e.tokens.back(), "a pants line needs exactly 3 slots (a b c)");
    }
    for (int l = 0; l < 3; ++l) {
      const Token& t = e.tokens[at(l)];
      const Side s = parse_side(t);
      const int c = parse_cuff(t, std::string_view(t.text).substr(0, t.text.size() - 1), n);
      gluing.push_back(SlotGluing{static_cast<int>(p), static_cast<SlotLabel>(l), c, s});
    }
  }
  try {
    return build_pants_decomposition(genus, gluing, names);
  } catch (const InvalidInput& err) {
    throw InvalidInput("[pants] (line " + std::to_string(sec.line) + "): " + err.what());
  }
}

struct LineRef {
  int curve;
  const Entry* entry;
};

NormalDiagram parse_level_two(const RawFile& raw, const PantsDecomposition& pd,
                              const SequenceDiagram& seq) {
  const int n = pd.cuff_count();
  const Section& strands = require(raw, "strands");
  const Section& orders = require(raw, "orders");
  check_count(strands, seq.words.size(), "strand lines", raw);
  check_count(orders, at(n), "cuff order lines", raw);

  Arrangement arr;
  std::map<std::string, int> index;
  for (int c = 0; c < n; ++c) index[std::to_string(c + 1)] = arr.add_curve(std::to_string(c + 1), Family::P);
  std::vector<LineRef> lines(at(n), LineRef{-1, nullptr});
  for (const Entry& e : orders.entries) {
    const int c = parse_cuff(e.name, e.name.text, n);
    if (lines[at(c)].entry) fail(e.name, "cuff " + e.name.text + " has two order lines");
    lines[at(c)] = LineRef{c, &e};
  }
  for (std::size_t j = 0; j < strands.entries.size(); ++j) {
    const Entry& e = strands.entries[j];
    if (e.name.text != seq.names[j]) {
      fail(e.name, "strand '" + e.name.text + "' out of order; expected '" + seq.names[j] + "'");
    }
    index[e.name.text] = arr.add_curve(e.name.text, Family::Q);
    lines.push_back(LineRef{index[e.name.text], &e});
  }
  if (const auto it = raw.sections.find("aux"); it != raw.sections.end()) {
    for (const Entry& e : it->second.entries) {
      if (!valid_curve_name(e.name.text)) fail(e.name, "invalid curve name '" + e.name.text + "'");
      if (index.count(e.name.text)) fail(e.name, "duplicate curve name '" + e.name.text + "'");
      index[e.name.text] = arr.add_curve(e.name.text, Family::Aux);
      lines.push_back(LineRef{index[e.name.text], &e});
    }
  }
  auto lookup = [&](const Token& t, const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) fail(t, "unknown curve '" + name + "'");
    return it->second;
  };

  // declarations first, then references
  std::vector<std::vector<int>> declared(arr.curves.size());
  for (const LineRef& lr : lines) {
    declared[at(lr.curve)].assign(lr.entry->tokens.size(), -1);
    for (std::size_t k = 0; k < lr.entry->tokens.size(); ++k) {
      const Token& t = lr.entry->tokens[k];
      const char last = t.text.back();
      if (last != '+' && last != '-') continue;
      const int o = lookup(t, t.text.substr(0, t.text.size() - 1));
      if (o >= lr.curve) {
        fail(t, "crossing with '" + arr.curves[at(o)].name + "' must be declared on that curve's line");
      }
      declared[at(lr.curve)][k] = arr.add_crossing(o, lr.curve, last == '+' ? 1 : -1);
    }
  }
  std::vector<bool> referenced(arr.crossings.size(), false);
  for (const LineRef& lr : lines) {
    auto& track = arr.curves[at(lr.curve)].crossings;
    for (std::size_t k = 0; k < lr.entry->tokens.size(); ++k) {
      const Token& t = lr.entry->tokens[k];
      if (declared[at(lr.curve)][k] >= 0) {
        track.push_back(declared[at(lr.curve)][k]);
        continue;
      }
      const auto dot = t.text.rfind('.');
      if (dot == std::string::npos) fail(t, "expected '<curve>+', '<curve>-' or '<curve>.<k>'");
      const int o = lookup(t, t.text.substr(0, dot));
      const auto pos = parse_int(std::string_view(t.text).substr(dot + 1));
      if (o <= lr.curve) {
        fail(t, "crossing with '" + arr.curves[at(o)].name + "' must be declared here, not referenced");
      }
      if (!pos || *pos < 1 || at(*pos) > declared[at(o)].size()) {
        fail(t, "position out of range on line '" + arr.curves[at(o)].name + "'");
      }
      const int id = declared[at(o)][at(*pos - 1)];
      if (id < 0 || arr.crossings[at(id)].first != lr.curve) {
        fail(t, "token " + std::to_string(*pos) + " of '" + arr.curves[at(o)].name +
                    "' does not declare a crossing with '" + arr.curves[at(lr.curve)].name + "'");
      }
      if (referenced[at(id)]) fail(t, "crossing referenced twice");
      referenced[at(id)] = true;
      track.push_back(id);
    }
  }
  for (const LineRef& lr : lines) {
    for (std::size_t k = 0; k < lr.entry->tokens.size(); ++k) {
      const int id = declared[at(lr.curve)][k];
      if (id >= 0 && !referenced[at(id)]) {
        fail(lr.entry->tokens[k], "crossing is never referenced on the line of '" +
                                      arr.curves[at(arr.crossings[at(id)].first)].name + "'");
      }
    }
  }
  NormalDiagram nd = build_normal_diagram(pd, std::move(arr));
  const SequenceDiagram projected = project_to_sequence(nd);
  for (std::size_t j = 0; j < seq.words.size(); ++j) {
    if (projected.words[j] != seq.words[j]) {
      throw InvalidInput("[curves] word of '" + seq.names[j] + "' does not match its strand");
    }
  }
  return nd;
}

std::string side_token(Side s) { return std::string(1, side_char(s)); }

std::string word_text(const std::vector<int>& word) {
  std::string out;
  for (int c : word) out += " " + std::to_string(c + 1);
  return out;
}

std::string crossing_token(const Arrangement& arr, int curve, int x) {
  const int o = arr.other(x, curve);
  if (o < curve) return arr.curves[at(o)].name + side_token(entering_side(arr, x, curve));
  const auto& t = arr.curves[at(o)].crossings;
  const auto k = std::find(t.begin(), t.end(), x) - t.begin();
  return arr.curves[at(o)].name + "." + std::to_string(k + 1);
}

}  // namespace

bool valid_curve_name(std::string_view name) {
  if (name.empty() || name.front() == '\'') return false;
  if (!std::all_of(name.begin(), name.end(), is_name_char)) return false;
  return !std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

DiagramFile make_file(SequenceDiagram d) {
  DiagramFile f;
  f.sequence = std::move(d);
  return f;
}

DiagramFile make_file(NormalDiagram d) {
  DiagramFile f;
  f.sequence = project_to_sequence(d);
  f.normal = std::move(d);
  return f;
}

DiagramFile parse_diagram_file(std::string_view text) {
  const RawFile raw = read_raw(text);
  if (!raw.genus) throw ParseError(raw.last_line + 1, 1, "missing 'genus' line");
  if (*raw.genus < 2) throw InvalidInput("genus must be at least 2");
  DiagramFile f;
  f.version = raw.version;
  f.name = raw.name;
  f.manifold = raw.manifold;
  f.irreducible = raw.irreducible;
  const PantsDecomposition pd = parse_pants(raw, *raw.genus);
  const int n = pd.cuff_count();

  const Section& curves = require(raw, "curves");
  check_count(curves, at(n), "curve lines", raw);
  std::vector<std::string> names;
  std::vector<std::vector<int>> words;
  for (const Entry& e : curves.entries) {
    if (!valid_curve_name(e.name.text)) fail(e.name, "invalid curve name '" + e.name.text + "'");
    if (std::find(names.begin(), names.end(), e.name.text) != names.end()) {
      fail(e.name, "duplicate curve name '" + e.name.text + "'");
    }
    names.push_back(e.name.text);
    std::vector<int> word;
    for (const Token& t : e.tokens) word.push_back(parse_cuff(t, t.text, n));
    words.push_back(std::move(word));
  }
  try {
    f.sequence = build_sequence_diagram(pd, words, names);
  } catch (const InvalidInput& err) {
    throw InvalidInput("[curves] (line " + std::to_string(curves.line) + "): " + err.what());
  }
  const bool has_strands = raw.sections.count("strands") > 0;
  const bool has_orders = raw.sections.count("orders") > 0;
  if (has_strands != has_orders) {
    const Section& s = raw.sections.at(has_strands ? "strands" : "orders");
    throw ParseError(s.line, 1, "[strands] and [orders] must appear together");
  }
  if (!has_strands && raw.sections.count("aux")) {
    throw ParseError(raw.sections.at("aux").line, 1, "[aux] needs level-2 data");
  }
  if (has_strands) f.normal = parse_level_two(raw, pd, f.sequence);
  return f;
}

std::string serialize(const DiagramFile& f) {
  const PantsDecomposition& pd = f.pd();
  std::ostringstream out;
  out << kMagic << " " << f.version << "\n";
  out << "genus " << pd.genus() << "\n";
  if (!f.name.empty()) out << "name " << f.name << "\n";
  if (!f.manifold.empty()) out << "manifold " << f.manifold << "\n";
  if (f.irreducible) out << "irreducible " << (*f.irreducible ? "yes" : "no") << "\n";
  out << "\n[pants]\n";
  for (int p = 0; p < pd.pants_count(); ++p) {
    out << pd.pants_name(p) << " =";
    for (SlotLabel l : {SlotLabel::A, SlotLabel::B, SlotLabel::C}) {
      const CuffSlot& s = pd.slot(p, l);
      out << " " << s.cuff + 1 << side_char(s.side);
    }
    out << "\n";
  }
  out << "\n[curves]\n";
  for (std::size_t j = 0; j < f.sequence.words.size(); ++j) {
    out << f.sequence.names[j] << " =" << word_text(f.sequence.words[j]) << "\n";
  }
  if (f.normal) {
    const Arrangement& arr = f.normal->arr;
    auto line = [&](int curve) {
      out << arr.curves[at(curve)].name << " =";
      for (int x : arr.curves[at(curve)].crossings) out << " " << crossing_token(arr, curve, x);
      out << "\n";
    };
    out << "\n[strands]\n";
    for (int q : f.normal->q_curves()) line(q);
    out << "\n[orders]\n";
    for (int c = 0; c < pd.cuff_count(); ++c) line(c);
    const auto aux = f.normal->aux_curves();
    if (!aux.empty()) {
      out << "\n[aux]\n";
      for (int a : aux) line(a);
    }
  }
  return out.str();
}

std::string to_json(const DiagramFile& f, int indent) {
  using nlohmann::ordered_json;
  const PantsDecomposition& pd = f.pd();
  ordered_json j;
  j["format"] = std::string(kMagic);
  j["version"] = f.version;
  j["genus"] = pd.genus();
  j["level"] = f.level();
  if (!f.name.empty()) j["name"] = f.name;
  if (!f.manifold.empty()) j["manifold"] = f.manifold;
  if (f.irreducible) j["irreducible"] = *f.irreducible;
  ordered_json pants = ordered_json::array();
  for (int p = 0; p < pd.pants_count(); ++p) {
    ordered_json slots = ordered_json::array();
    for (SlotLabel l : {SlotLabel::A, SlotLabel::B, SlotLabel::C}) {
      const CuffSlot& s = pd.slot(p, l);
      slots.push_back({{"slot", std::string(1, label_char(l))},
                       {"cuff", s.cuff + 1},
                       {"side", side_token(s.side)}});
    }
    pants.push_back({{"name", pd.pants_name(p)}, {"slots", slots}});
  }
  j["pants"] = pants;
  ordered_json curves = ordered_json::array();
  for (std::size_t k = 0; k < f.sequence.words.size(); ++k) {
    ordered_json word = ordered_json::array();
    for (int c : f.sequence.words[k]) word.push_back(c + 1);
    curves.push_back({{"name", f.sequence.names[k]}, {"word", word}});
  }
  j["curves"] = curves;
  if (f.normal) {
    const Arrangement& arr = f.normal->arr;
    auto lines = [&](const std::vector<int>& ids) {
      ordered_json out = ordered_json::array();
      for (int c : ids) {
        ordered_json toks = ordered_json::array();
        for (int x : arr.curves[at(c)].crossings) toks.push_back(crossing_token(arr, c, x));
        out.push_back({{"name", arr.curves[at(c)].name}, {"tokens", toks}});
      }
      return out;
    };
    j["strands"] = lines(f.normal->q_curves());
    std::vector<int> cuffs(at(pd.cuff_count()));
    for (int c = 0; c < pd.cuff_count(); ++c) cuffs[at(c)] = c;
    j["orders"] = lines(cuffs);
    if (!f.normal->aux_curves().empty()) j["aux"] = lines(f.normal->aux_curves());
  }
  return j.dump(indent);
}

std::string load_diagram_text(const std::string& file) {
  namespace fs = std::filesystem;
  auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  std::error_code ec;
  if (fs::is_regular_file(file, ec)) return read(file);
  if (const char* dir = std::getenv("HEEGAARD_FIXTURE_DIR"); dir && *dir) {
    const fs::path p = fs::path(dir) / (file + ".hd");
    if (fs::is_regular_file(p, ec)) return read(p);
  }
  if (auto text = builtin_fixture(file)) return *text;
  throw InvalidInput("no such file or builtin fixture: " + file);
}

}  // namespace heegaard
