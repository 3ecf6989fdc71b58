#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace braidcoh {

// A finite sequence of generator ids. Ids are small integers stored one per byte,
// so short words stay inside the string's inline buffer.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  static Word letter(int id) { return Word(std::string(1, static_cast<char>(id))); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const noexcept { return static_cast<unsigned char>(letters_[i]); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }
  std::size_t find(const Word& pattern, std::size_t from = 0) const noexcept {
    return letters_.find(pattern.letters_, from);
  }
  bool ends_with(const Word& suffix) const noexcept {
    return letters_.size() >= suffix.size() &&
           letters_.compare(letters_.size() - suffix.size(), suffix.size(), suffix.letters_) == 0;
  }

  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  const std::string& letters() const noexcept { return letters_; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

}  // namespace braidcoh

template <>
struct std::hash<braidcoh::Word> {
  std::size_t operator()(const braidcoh::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
