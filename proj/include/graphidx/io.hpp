#pragma once

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include "graphidx/error.hpp"

namespace graphidx {

/// Writes `path` through a temporary sibling file renamed into place, so
/// readers never observe a partial file.
inline void write_file_atomically(const std::string& path, const std::function<void(std::ostream&)>& body) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("cannot open '" + tmp + "' for writing");
        try {
            body(out);
        } catch (...) {
            out.close();
            std::remove(tmp.c_str());
            throw;
        }
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw Error("failed writing '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace graphidx
