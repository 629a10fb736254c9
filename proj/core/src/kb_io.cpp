#include "argkb/kb_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "argkb/errors.hpp"

namespace argkb {

const FlatKB& LoadedKB::flat() const {
  if (const auto* s = std::get_if<StratifiedKB>(&kb)) return s->flat();
  return std::get<FlatKB>(kb);
}

StratifiedKB LoadedKB::stratified() const {
  if (const auto* s = std::get_if<StratifiedKB>(&kb)) return *s;
  return StratifiedKB::single_layer(std::get<FlatKB>(kb));
}

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::size_t first_non_blank(std::string_view s) { return s.find_first_not_of(" \t\r"); }

struct Header {
  std::optional<Weight> weight;
};

// Parses "[layer]" or "[layer <w>]"; `line` starts with '['.
Header parse_header(std::string_view text, std::size_t line_no, std::size_t column) {
  const auto close = text.find(']');
  if (close == std::string_view::npos) throw ParseError("missing ']' in layer header", line_no, column);
  if (first_non_blank(text.substr(close + 1)) != std::string_view::npos) {
    throw ParseError("unexpected text after layer header", line_no, column + close + 1);
  }
  std::string_view inner = text.substr(1, close - 1);
  const auto b = first_non_blank(inner);
  if (b == std::string_view::npos || inner.substr(b, 5) != "layer") {
    throw ParseError("expected 'layer' in section header", line_no, column + 1);
  }
  std::string_view rest = inner.substr(b + 5);
  const auto w = first_non_blank(rest);
  if (w == std::string_view::npos) return {};
  if (w == 0) throw ParseError("expected whitespace after 'layer'", line_no, column + 1 + b + 5);
  const auto end = rest.find_last_not_of(" \t\r");
  const std::size_t weight_column = column + 1 + b + 5 + w;
  try {
    return {Weight::parse(rest.substr(w, end - w + 1))};
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), line_no, weight_column);
  }
}

}  // namespace

LoadedKB parse_kb(std::string_view text, TopWeight top) {
  std::vector<Formula> flat;
  std::vector<StratifiedKB::Layer> layers;
  std::optional<bool> weighted;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const std::string_view line = strip_comment(raw);
    const auto b = first_non_blank(line);
    if (b == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (line[b] == '[') {
      const Header h = parse_header(line.substr(b), line_no, b + 1);
      if (!weighted) {
        if (!flat.empty()) throw ParseError("formula before the first layer header", line_no, b + 1);
        weighted = h.weight.has_value();
      } else if (*weighted != h.weight.has_value()) {
        throw ParseError("layer headers must be either all weighted or all bare", line_no, b + 1);
      }
      layers.push_back({h.weight.value_or(Weight::zero()), {}});
    } else {
      Formula f = Formula::truth();
      try {
        f = parse_formula(raw);
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), line_no, e.column());
      }
      if (layers.empty()) {
        flat.push_back(std::move(f));
      } else {
        layers.back().formulas.push_back(std::move(f));
      }
    }
    if (end == text.size()) break;
  }

  if (!weighted) return LoadedKB{FlatKB(std::move(flat))};
  if (*weighted) return LoadedKB{StratifiedKB(std::move(layers), top)};
  std::vector<std::vector<Formula>> groups;
  for (auto& l : layers) groups.push_back(std::move(l.formulas));
  return LoadedKB{StratifiedKB::with_default_weights(std::move(groups))};
}

LoadedKB load_kb(const std::filesystem::path& path, TopWeight top) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb(buffer.str(), top);
}

}  // namespace argkb
