#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "argkb/knowledge_base.hpp"

namespace argkb {

/// Contents of a knowledge-base file. Files without `[layer ...]` headers
/// are flat; any header makes the whole file stratified.
struct LoadedKB {
  std::variant<FlatKB, StratifiedKB> kb;

  bool is_stratified() const { return std::holds_alternative<StratifiedKB>(kb); }
  /// The flat view: the file itself, or the layers concatenated.
  const FlatKB& flat() const;
  /// The stratified view: the file itself, or one layer of weight 1.
  StratifiedKB stratified() const;
};

/// Parses the text of a knowledge-base file:
///
///   # comment
///   [layer 1.0]
///   A
///   !A | B
///   [layer 0.4]
///   ...
///
/// One formula per line. Headers are either all weighted or all bare
/// (`[layer]`, giving default weights 1 - (i-1)/n). Throws ParseError
/// (positions refer to the file) or InvalidKnowledgeBase.
LoadedKB parse_kb(std::string_view text, TopWeight top = TopWeight::kMustBeOne);

/// Reads and parses a file. Throws Error if it cannot be opened.
LoadedKB load_kb(const std::filesystem::path& path, TopWeight top = TopWeight::kMustBeOne);

}  // namespace argkb
