#include "grasstc/ring_cache.hpp"

#include "grasstc/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

namespace grasstc {

namespace fs = std::filesystem;

std::filesystem::path cache_dir_or_default(const std::string& explicit_dir) {
    if (!explicit_dir.empty())
        return fs::path(explicit_dir);
    if (const char* env = std::getenv(kCacheDirEnvVar); env && *env)
        return fs::path(env);
    return {};
}

std::filesystem::path cache_file_path(const fs::path& dir, unsigned k, unsigned n) {
    std::ostringstream name;
    name << "ring-k" << k << "-n" << n << ".v1.txt";
    return dir / name.str();
}

std::filesystem::path cache_store(const GrassmannRing& ring, const fs::path& dir) {
    if (dir.empty())
        throw usage_error("cache_store: no cache directory configured");
    fs::create_directories(dir);
    const fs::path final_path = cache_file_path(dir, ring.k(), ring.n());
    std::ostringstream tmp_name;
    tmp_name << final_path.filename().string() << ".tmp-" << ::getpid();
    const fs::path tmp_path = dir / tmp_name.str();

    {
        std::ofstream out(tmp_path);
        if (!out)
            throw usage_error("cache_store: cannot write " + tmp_path.string());
        out << "GRASSTC-NF v1 k=" << ring.k() << " n=" << ring.n() << "\n";
        for (unsigned d = 0; d <= ring.dim(); ++d) {
            if (!ring.has_block(d))
                continue;
            const DegreeBlock& blk = ring.block(d);
            out << "degree " << d << " monomials " << blk.monomials.size()
                << " basis " << blk.basis.size() << "\n";
            for (std::size_t b = 0; b < blk.basis.size(); ++b)
                out << Polynomial::from_monomial(ring.space(), blk.basis_monomial(b))
                           .to_string()
                    << "\n";
            for (std::size_t i = 0; i < blk.monomials.size(); ++i) {
                std::vector<Monomial> terms;
                const BitRow& row = blk.normal_forms[i];
                for (std::size_t b = 0; b < blk.basis.size(); ++b)
                    if (row.get(b))
                        terms.push_back(blk.basis_monomial(b));
                out << Polynomial::from_monomials(ring.space(), std::move(terms))
                           .to_string()
                    << "\n";
            }
        }
        out.flush();
        if (!out)
            throw usage_error("cache_store: write failed for " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path); // atomic replacement: last writer wins
    return final_path;
}

namespace {

bool parse_header(const std::string& line, unsigned& k, unsigned& n,
                  std::string& why) {
    std::istringstream in(line);
    std::string magic, version, ktok, ntok;
    in >> magic >> version >> ktok >> ntok;
    if (magic != "GRASSTC-NF") {
        why = "unrecognized header";
        return false;
    }
    if (version != "v1") {
        why = "unsupported format version '" + version + "'";
        return false;
    }
    if (ktok.rfind("k=", 0) != 0 || ntok.rfind("n=", 0) != 0) {
        why = "malformed header parameters";
        return false;
    }
    try {
        k = static_cast<unsigned>(std::stoul(ktok.substr(2)));
        n = static_cast<unsigned>(std::stoul(ntok.substr(2)));
    } catch (const std::exception&) {
        why = "malformed header parameters";
        return false;
    }
    return true;
}

} // namespace

CacheLoadResult cache_load(const GrassmannRing& ring, const fs::path& dir) {
    CacheLoadResult res;
    if (dir.empty())
        return res;
    const fs::path path = cache_file_path(dir, ring.k(), ring.n());
    std::ifstream in(path);
    if (!in)
        return res; // clean miss

    std::string line;
    if (!std::getline(in, line)) {
        res.warning = path.string() + ": empty file; recomputing";
        return res;
    }
    unsigned k = 0, n = 0;
    std::string why;
    if (!parse_header(line, k, n, why)) {
        res.warning = path.string() + ": " + why + "; recomputing";
        return res;
    }
    if (k != ring.k() || n != ring.n()) {
        res.warning = path.string() + ": header is for another ring; recomputing";
        return res;
    }

    // Parse the whole file before injecting anything: a damaged file must
    // leave the ring untouched.
    std::vector<DegreeBlock> blocks;
    std::map<unsigned, bool> seen;
    auto corrupt = [&](const std::string& detail) {
        res.warning = path.string() + ": " + detail + "; recomputing";
        return res;
    };
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream hdr(line);
        std::string w_degree, w_monomials, w_basis;
        unsigned d = 0;
        std::size_t cnt = 0, nb = 0;
        hdr >> w_degree >> d >> w_monomials >> cnt >> w_basis >> nb;
        if (!hdr || w_degree != "degree" || w_monomials != "monomials" ||
            w_basis != "basis")
            return corrupt("malformed degree header '" + line + "'");
        if (d > ring.dim())
            return corrupt("degree beyond the ring dimension");
        if (seen[d])
            return corrupt("duplicate degree section");
        seen[d] = true;

        DegreeBlock blk;
        blk.degree = d;
        blk.monomials = monomials_of_degree(*ring.space(), d);
        if (blk.monomials.size() != cnt)
            return corrupt("monomial count mismatch in degree " + std::to_string(d));
        if (nb > cnt)
            return corrupt("basis larger than the degree");

        std::map<std::vector<Exp>, std::size_t> index_of;
        for (std::size_t i = 0; i < blk.monomials.size(); ++i)
            index_of[blk.monomials[i].exps] = i;

        for (std::size_t b = 0; b < nb; ++b) {
            if (!std::getline(in, line))
                return corrupt("truncated basis list");
            Polynomial p;
            try {
                p = Polynomial::parse(ring.space(), line);
            } catch (const std::exception&) {
                return corrupt("unparseable basis monomial '" + line + "'");
            }
            if (p.term_count() != 1)
                return corrupt("basis entry is not a single monomial");
            auto it = index_of.find(p.terms().front().exps);
            if (it == index_of.end())
                return corrupt("basis monomial outside the degree");
            if (!blk.basis.empty() && it->second <= blk.basis.back())
                return corrupt("basis monomials out of order");
            blk.basis.push_back(it->second);
        }
        std::map<std::size_t, std::size_t> basis_pos;
        for (std::size_t b = 0; b < blk.basis.size(); ++b)
            basis_pos[blk.basis[b]] = b;

        blk.normal_forms.reserve(cnt);
        for (std::size_t i = 0; i < cnt; ++i) {
            if (!std::getline(in, line))
                return corrupt("truncated normal-form list");
            Polynomial p;
            try {
                p = Polynomial::parse(ring.space(), line);
            } catch (const std::exception&) {
                return corrupt("unparseable normal form '" + line + "'");
            }
            BitRow row(blk.basis.size());
            for (const Monomial& t : p.terms()) {
                auto it = index_of.find(t.exps);
                if (it == index_of.end())
                    return corrupt("normal-form term outside the degree");
                auto bp = basis_pos.find(it->second);
                if (bp == basis_pos.end())
                    return corrupt("normal-form term is not a basis monomial");
                row.set(bp->second);
            }
            blk.normal_forms.push_back(std::move(row));
        }
        blocks.push_back(std::move(blk));
    }

    for (auto& blk : blocks) {
        try {
            ring.inject_block(std::move(blk));
        } catch (const usage_error& e) {
            return corrupt(std::string("rejected block: ") + e.what());
        }
        ++res.degrees;
    }
    res.loaded = true;
    return res;
}

} // namespace grasstc
