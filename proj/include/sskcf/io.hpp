#pragma once

// PNG and JPEG codecs for sequence frames, wrapped over libpng and libjpeg.
// Decoding dispatches on the file's magic bytes rather than its extension,
// and all failures surface as exceptions naming the offending path. Alpha
// channels are stripped on load; palette and 16-bit PNGs are expanded to
// 8-bit so every frame arrives as 1- or 3-channel interleaved bytes.

#include <sskcf/image.hpp>

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace sskcf {

namespace detail {

struct FileHandle {
    std::FILE* f = nullptr;
    FileHandle(const std::string& path, const char* mode) : f(std::fopen(path.c_str(), mode)) {}
    ~FileHandle() {
        if (f) std::fclose(f);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

// libjpeg reports errors by calling error_exit; routing that through longjmp
// is the documented way to regain control without aborting the process.
struct JpegErrorTrap {
    jpeg_error_mgr mgr;
    std::jmp_buf jump;
};

inline void jpeg_error_trap_exit(j_common_ptr cinfo) {
    std::longjmp(reinterpret_cast<JpegErrorTrap*>(cinfo->err)->jump, 1);
}

inline void jpeg_error_trap_silence(j_common_ptr) {}

}  // namespace detail

inline Image load_png(const std::string& path) {
    detail::FileHandle fh(path, "rb");
    if (!fh.f) throw std::runtime_error("load_png: cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("load_png: failed to allocate reader");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("load_png: failed to allocate info");
    }

    // Locals live above the setjmp so the longjmp path never skips an
    // initialization; the later throw unwinds them normally.
    Image img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("load_png: decode failure in " + path);
    }

    png_init_io(png, fh.f);
    png_read_info(png, info);
    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int depth = png_get_bit_depth(png, info);
    const int color = png_get_color_type(png, info);
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    img = Image(static_cast<int>(w), static_cast<int>(h), channels);
    rows.resize(h);
    const std::size_t row_bytes = static_cast<std::size_t>(w) * channels;
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.pixels.data() + y * row_bytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

inline Image load_jpeg(const std::string& path) {
    detail::FileHandle fh(path, "rb");
    if (!fh.f) throw std::runtime_error("load_jpeg: cannot open " + path);

    jpeg_decompress_struct cinfo;
    detail::JpegErrorTrap trap;
    cinfo.err = jpeg_std_error(&trap.mgr);
    trap.mgr.error_exit = detail::jpeg_error_trap_exit;
    trap.mgr.output_message = detail::jpeg_error_trap_silence;

    Image img;
    if (setjmp(trap.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw std::runtime_error("load_jpeg: decode failure in " + path);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fh.f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    img = Image(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height),
                cinfo.output_components);
    const std::size_t row_bytes =
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.channels);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = img.pixels.data() + cinfo.output_scanline * row_bytes;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

inline Image load_image(const std::string& path) {
    unsigned char magic[2] = {0, 0};
    {
        detail::FileHandle fh(path, "rb");
        if (!fh.f) throw std::runtime_error("load_image: cannot open " + path);
        if (std::fread(magic, 1, 2, fh.f) != 2)
            throw std::runtime_error("load_image: truncated file " + path);
    }
    if (magic[0] == 0x89 && magic[1] == 'P') return load_png(path);
    if (magic[0] == 0xff && magic[1] == 0xd8) return load_jpeg(path);
    throw std::runtime_error("load_image: unrecognized format in " + path);
}

inline void save_png(const std::string& path, const PixelView& img) {
    if (img.empty()) throw std::invalid_argument("save_png: empty image");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("save_png: channels must be 1 or 3");
    detail::FileHandle fh(path, "wb");
    if (!fh.f) throw std::runtime_error("save_png: cannot open " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("save_png: failed to allocate writer");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("save_png: failed to allocate info");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("save_png: encode failure in " + path);
    }

    png_init_io(png, fh.f);
    const int color = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(img.data + static_cast<std::size_t>(y) * img.stride));
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

inline void save_jpeg(const std::string& path, const PixelView& img, int quality = 92) {
    if (img.empty()) throw std::invalid_argument("save_jpeg: empty image");
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("save_jpeg: channels must be 1 or 3");
    if (quality < 1 || quality > 100) throw std::invalid_argument("save_jpeg: bad quality");
    detail::FileHandle fh(path, "wb");
    if (!fh.f) throw std::runtime_error("save_jpeg: cannot open " + path);

    jpeg_compress_struct cinfo;
    detail::JpegErrorTrap trap;
    cinfo.err = jpeg_std_error(&trap.mgr);
    trap.mgr.error_exit = detail::jpeg_error_trap_exit;
    trap.mgr.output_message = detail::jpeg_error_trap_silence;
    if (setjmp(trap.jump)) {
        jpeg_destroy_compress(&cinfo);
        throw std::runtime_error("save_jpeg: encode failure in " + path);
    }

    jpeg_create_compress(&cinfo);
    jpeg_stdio_dest(&cinfo, fh.f);
    cinfo.image_width = static_cast<JDIMENSION>(img.width);
    cinfo.image_height = static_cast<JDIMENSION>(img.height);
    cinfo.input_components = img.channels;
    cinfo.in_color_space = img.channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(img.data + cinfo.next_scanline * img.stride);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
}

}  // namespace sskcf
