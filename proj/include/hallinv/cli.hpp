#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hallinv/bigint.hpp"
#include "hallinv/charvar.hpp"

namespace hallinv {

struct TableRow {
    std::string name;
    std::vector<BigInt> values;
};

// Columns Z2, Z3, Z2^2, Z4, Z2+Z4, Z8, S3, A4, M3,7.
std::vector<std::string> table1_columns();
std::vector<std::string> table1_default_rows();
TableRow table1_row(const std::string& fixture_name, const BetaOptions& opts = {});

// Columns S3, A4, M3,7 for horizontal arrangements A<perm>.
std::vector<std::string> table2_columns();
std::vector<std::string> table2_default_rows();
TableRow table2_row(const std::string& fixture_name, const BetaOptions& opts = {});

std::string render_table(const std::vector<std::string>& columns, const std::vector<TableRow>& rows);

// Exit codes: 0 success, 1 input error, 2 search budget exceeded, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hallinv
