#include "vpix/imageio.hpp"

#include "vpix/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace vpix {

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string pnm_token(std::istream& in)
{
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            if (!tok.empty()) break;
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

long pnm_int(std::istream& in, const char* what)
{
    const std::string tok = pnm_token(in);
    long v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
        throw ParseError(std::string("malformed PGM header: bad ") + what);
    return v;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

GrayImage parse_pgm(std::istream& in)
{
    char magic[2] = {};
    if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        throw ParseError("not a P2/P5 PGM file");
    const bool binary = magic[1] == '5';

    const long width = pnm_int(in, "width");
    const long height = pnm_int(in, "height");
    const long maxval = pnm_int(in, "maxval");
    if (width <= 0 || height <= 0) throw ParseError("malformed PGM header: nonpositive dimensions");
    if (maxval <= 0) throw ParseError("malformed PGM header: bad maxval");
    if (maxval > 255) throw ParseError("unsupported maxval " + std::to_string(maxval));

    GrayImage img(height, width);
    if (binary) {
        std::vector<unsigned char> buf(static_cast<std::size_t>(width * height));
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() != static_cast<std::streamsize>(buf.size())) throw ParseError("truncated PGM data");
        for (Eigen::Index i = 0; i < img.size(); ++i) {
            if (buf[i] > maxval) throw ParseError("PGM sample exceeds maxval");
            img.data()[i] = buf[i];
        }
    } else {
        for (Eigen::Index i = 0; i < img.size(); ++i) {
            const std::string tok = pnm_token(in);
            if (tok.empty()) throw ParseError("truncated PGM data");
            long v = 0;
            const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || end != tok.data() + tok.size() || v < 0 || v > maxval)
                throw ParseError("bad PGM sample '" + tok + "'");
            img.data()[i] = static_cast<double>(v);
        }
    }
    return img;
}

GrayImage read_pgm(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return parse_pgm(in);
}

std::uint8_t quantize(double sample)
{
    const double r = std::floor(sample + 0.5);
    if (!(r > 0.0)) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

void write_pgm(const GrayImage& img, std::ostream& out)
{
    out << "P5\n" << img.cols() << ' ' << img.rows() << "\n255\n";
    std::vector<unsigned char> buf(static_cast<std::size_t>(img.size()));
    for (Eigen::Index i = 0; i < img.size(); ++i) buf[i] = quantize(img.data()[i]);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path)
{
    auto out = open_out(path);
    write_pgm(img, out);
    finish(out, path);
}

void write_raw(const GrayImage& img, const std::filesystem::path& path)
{
    auto out = open_out(path);
    out << "raw " << img.cols() << ' ' << img.rows() << '\n';
    char buf[32];
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            const auto res = std::to_chars(buf, buf + sizeof buf, img(r, c));
            if (c > 0) out << ' ';
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
    finish(out, path);
}

GrayImage read_raw(const std::filesystem::path& path)
{
    auto in = open_in(path);
    std::string keyword;
    long width = 0, height = 0;
    if (!(in >> keyword >> width >> height) || keyword != "raw" || width <= 0 || height <= 0)
        throw ParseError("malformed raw header", 1);
    GrayImage img(height, width);
    std::string tok;
    for (Eigen::Index i = 0; i < img.size(); ++i) {
        if (!(in >> tok)) throw ParseError("truncated raw data");
        double v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size()) throw ParseError("bad raw sample '" + tok + "'");
        img.data()[i] = v;
    }
    if (in >> tok) throw ParseError("trailing data after raw samples");
    return img;
}

GrayImage read_image(const std::filesystem::path& path)
{
    char magic[3] = {};
    {
        auto in = open_in(path);
        in.read(magic, 3);
    }
    if (magic[0] == 'r' && magic[1] == 'a' && magic[2] == 'w') return read_raw(path);
    return read_pgm(path);
}

void write_labelmap(const LabelMap& labels, std::ostream& out)
{
    out << "labels " << labels.cols() << ' ' << labels.rows() << '\n';
    for (Eigen::Index r = 0; r < labels.rows(); ++r) {
        for (Eigen::Index c = 0; c < labels.cols(); ++c) {
            if (c > 0) out << ' ';
            out << labels(r, c);
        }
        out << '\n';
    }
}

void write_labelmap(const LabelMap& labels, const std::filesystem::path& path)
{
    auto out = open_out(path);
    write_labelmap(labels, out);
    finish(out, path);
}

LabelMap parse_labelmap(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty label map", 1);
    std::istringstream hs(header);
    std::string keyword, extra;
    long width = 0, height = 0;
    if (!(hs >> keyword >> width >> height) || keyword != "labels" || (hs >> extra) || width <= 0 || height <= 0)
        throw ParseError("expected 'labels <width> <height>'", 1);

    std::vector<std::int32_t> values;
    values.reserve(static_cast<std::size_t>(width * height));
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::int32_t v = 0;
            const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || end != tok.data() + tok.size())
                throw ParseError("bad label '" + tok + "'", line_no);
            values.push_back(v);
        }
    }
    if (values.size() != static_cast<std::size_t>(width * height))
        throw ParseError("label count " + std::to_string(values.size()) + " does not match declared " +
                         std::to_string(width) + "x" + std::to_string(height));
    LabelMap labels(height, width);
    std::copy(values.begin(), values.end(), labels.data());
    return labels;
}

LabelMap read_labelmap(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return parse_labelmap(in);
}

}  // namespace vpix
