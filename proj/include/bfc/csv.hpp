#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bfc {

/// Writes rows with full-precision decimal serialization (%.17g), so values
/// survive a read-back bit-exactly.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_csv(
    const std::string& path);

}  // namespace bfc
