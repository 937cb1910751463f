// spikesal: saliency maps from simulated visual-cortex spike trains.
//
// Licensed under the Apache License, Version 2.0
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef SPIKESAL_IMAGE_IO_HPP
#define SPIKESAL_IMAGE_IO_HPP

#include <cstdio>
#include <cstring>
#include <csetjmp>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "spikesal/plane.hpp"

namespace spikesal {

/// Three intensity planes in [0,1], all the same size.
struct RgbImage {
    Plane red;
    Plane green;
    Plane blue;

    int width() const { return red.width(); }
    int height() const { return red.height(); }
};

namespace detail {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FileHandle = std::unique_ptr<std::FILE, FileCloser>;

inline RgbImage planes_from_rgb8(const std::vector<unsigned char>& rgb, int w, int h) {
    RgbImage img{Plane(w, h), Plane(w, h), Plane(w, h)};
    const double inv = 1.0 / 255.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t o = 3 * (static_cast<std::size_t>(y) * w + x);
            img.red.at(x, y) = rgb[o] * inv;
            img.green.at(x, y) = rgb[o + 1] * inv;
            img.blue.at(x, y) = rgb[o + 2] * inv;
        }
    }
    return img;
}

inline RgbImage read_png(std::FILE* fp, const std::string& path) {
    png_byte header[8];
    if (std::fread(header, 1, 8, fp) != 8 || png_sig_cmp(header, 0, 8))
        throw std::runtime_error("unreadable file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("unreadable file: " + path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("unreadable file: " + path);
    }

    std::vector<unsigned char> pixels;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("unreadable file: " + path);
    }

    png_init_io(png, fp);
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    if (w == 0 || h == 0) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("zero-sized image: " + path);
    }

    // Normalize every PNG variant to 8-bit RGB.
    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    pixels.resize(static_cast<std::size_t>(w) * h * 3);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * w * 3;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);
    return planes_from_rgb8(pixels, static_cast<int>(w), static_cast<int>(h));
}

struct JpegErrorContext {
    jpeg_error_mgr mgr;
    std::jmp_buf escape;
};

inline void jpeg_error_trampoline(j_common_ptr cinfo) {
    auto* ctx = reinterpret_cast<JpegErrorContext*>(cinfo->err);
    std::longjmp(ctx->escape, 1);
}

inline RgbImage read_jpeg(std::FILE* fp, const std::string& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorContext err;
    cinfo.err = jpeg_std_error(&err.mgr);
    err.mgr.error_exit = jpeg_error_trampoline;

    std::vector<unsigned char> pixels;
    if (setjmp(err.escape)) {
        jpeg_destroy_decompress(&cinfo);
        throw std::runtime_error("unreadable file: " + path);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int w = static_cast<int>(cinfo.output_width);
    const int h = static_cast<int>(cinfo.output_height);
    if (w == 0 || h == 0) {
        jpeg_destroy_decompress(&cinfo);
        throw std::runtime_error("zero-sized image: " + path);
    }

    pixels.resize(static_cast<std::size_t>(w) * h * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        unsigned char* row = pixels.data() + static_cast<std::size_t>(cinfo.output_scanline) * w * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return planes_from_rgb8(pixels, w, h);
}

}  // namespace detail

/// Loads a PNG or JPEG file into three [0,1] planes (8-bit values / 255).
/// The format is detected from the file signature, not the extension.
inline RgbImage load_image(const std::string& path) {
    detail::FileHandle fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw std::runtime_error("unreadable file: " + path);

    unsigned char magic[2] = {0, 0};
    if (std::fread(magic, 1, 2, fp.get()) != 2)
        throw std::runtime_error("unreadable file: " + path);
    std::rewind(fp.get());

    if (magic[0] == 0x89 && magic[1] == 'P') return detail::read_png(fp.get(), path);
    if (magic[0] == 0xFF && magic[1] == 0xD8) return detail::read_jpeg(fp.get(), path);
    throw std::runtime_error("unsupported format: " + path);
}

namespace detail {

inline void write_png_bytes(const std::string& path, const std::vector<unsigned char>& bytes,
                            int w, int h, int channels) {
    FileHandle fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw std::runtime_error("cannot write file: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("cannot write file: " + path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("cannot write file: " + path);
    }
    std::vector<png_bytep> rows(h);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("cannot write file: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h), 8,
                 channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    for (int y = 0; y < h; ++y)
        rows[y] = const_cast<png_bytep>(bytes.data()) +
                  static_cast<std::size_t>(y) * w * channels;
    png_set_rows(png, info, rows.data());
    png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
    png_destroy_write_struct(&png, &info);
}

inline unsigned char to_byte(double v) {
    const double scaled = std::lround(255.0 * std::clamp(v, 0.0, 1.0));
    return static_cast<unsigned char>(scaled);
}

}  // namespace detail

/// Writes a [0,1] plane as an 8-bit grayscale PNG, value = round(255 * v).
inline void save_png_gray(const std::string& path, const Plane& plane) {
    const int w = plane.width();
    const int h = plane.height();
    std::vector<unsigned char> bytes(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            bytes[static_cast<std::size_t>(y) * w + x] = detail::to_byte(plane.at(x, y));
    detail::write_png_bytes(path, bytes, w, h, 1);
}

/// Writes three [0,1] planes as an 8-bit RGB PNG.
inline void save_png_rgb(const std::string& path, const RgbImage& image) {
    require_same_size(image.red, image.green, "save_png_rgb");
    require_same_size(image.red, image.blue, "save_png_rgb");
    const int w = image.width();
    const int h = image.height();
    std::vector<unsigned char> bytes(static_cast<std::size_t>(w) * h * 3);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t o = 3 * (static_cast<std::size_t>(y) * w + x);
            bytes[o] = detail::to_byte(image.red.at(x, y));
            bytes[o + 1] = detail::to_byte(image.green.at(x, y));
            bytes[o + 2] = detail::to_byte(image.blue.at(x, y));
        }
    }
    detail::write_png_bytes(path, bytes, w, h, 3);
}

}  // namespace spikesal

#endif  // SPIKESAL_IMAGE_IO_HPP
