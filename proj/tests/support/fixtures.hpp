#ifndef KANCAT_TESTS_SUPPORT_FIXTURES_HPP_
#define KANCAT_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <ostream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "kancat/io.hpp"

namespace kancat {

  // Readable gtest failure output.
  inline void PrintTo(PathPolynomial const& f, std::ostream* os) {
    *os << to_string(f);
  }
  inline void PrintTo(TaggedPolynomial const& f, std::ostream* os) {
    *os << to_string(f);
  }

}  // namespace kancat

namespace support {

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  inline std::string data_path(std::string const& name) {
    return std::string(KANCAT_DATA_DIR) + "/" + name;
  }

  inline kancat::Presentation load(std::string const& name) {
    return kancat::parse_presentation(read_file(data_path(name)));
  }

  inline kancat::PathPolynomial poly(kancat::Presentation const& p, std::string const& text) {
    return kancat::parse_polynomial(text, p.order);
  }

  inline kancat::Path path(kancat::Presentation const& p, std::string const& text) {
    auto f = poly(p, text);
    return f.leading_path();
  }

}  // namespace support

#endif  // KANCAT_TESTS_SUPPORT_FIXTURES_HPP_
