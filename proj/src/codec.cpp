#include "oracleforge/codec.hpp"

#include <cmath>

namespace oracleforge {

double quantize_us(double seconds) {
    return static_cast<double>(std::llround(seconds * 1e6)) / 1e6;
}

} // namespace oracleforge

namespace oracleforge::codec {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

void append_hex(Bytes& out, std::uint64_t value, std::size_t width) {
    if (width < 16 && value >= (1ull << (4 * width))) {
        throw CodecError("value does not fit in hex field of width " + std::to_string(width));
    }
    for (std::size_t i = 0; i < width; ++i) {
        out.push_back(static_cast<std::uint8_t>(kHexDigits[(value >> (4 * (width - 1 - i))) & 0xf]));
    }
}

class Reader {
public:
    explicit Reader(const Bytes& data, std::size_t start = 0) : data_(data), pos_(start) {}

    std::uint64_t read_hex(std::size_t width) {
        need(width);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < width; ++i) {
            char c = static_cast<char>(data_[pos_ + i]);
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else throw CodecError("invalid hex digit in field");
            v = (v << 4) | static_cast<std::uint64_t>(d);
        }
        pos_ += width;
        return v;
    }

    std::string read_string() {
        need(1);
        std::size_t len = data_[pos_++];
        if (len == 0) throw CodecError("empty string field");
        need(len);
        std::string s(reinterpret_cast<const char*>(data_.data() + pos_), len);
        pos_ += len;
        return s;
    }

    std::uint8_t read_byte() {
        need(1);
        return data_[pos_++];
    }

    void expect_end() const {
        if (pos_ != data_.size()) throw CodecError("trailing bytes after decoded record");
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > data_.size()) throw CodecError("record truncated");
    }

    const Bytes& data_;
    std::size_t pos_ = 0;
};

void append_string(Bytes& out, const std::string& s) {
    if (s.empty() || s.size() > kMaxStringField) {
        throw CodecError("string field must be 1..255 bytes");
    }
    for (char c : s) {
        if (c == '\0' || static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7e) {
            throw CodecError("string field must be printable ASCII");
        }
    }
    out.push_back(static_cast<std::uint8_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

void append_selector(Bytes& out, std::string_view sel) {
    out.insert(out.end(), sel.begin(), sel.end());
}

Reader reader_after_selector(const Bytes& payload, std::string_view sel) {
    if (selector_of(payload) != sel) {
        throw CodecError(std::string("unexpected selector, wanted ") + std::string(sel));
    }
    return Reader(payload, 4);
}

std::uint64_t checked_us(double seconds) {
    long long us = std::llround(seconds * 1e6);
    if (us < 0 || us >= (1ll << 48)) throw CodecError("timestamp out of encodable range");
    return static_cast<std::uint64_t>(us);
}

void append_scan_fields(Bytes& out, const ScanRecord& record) {
    if (record.order_id == 0 || record.order_id > kMaxOrderId) {
        throw CodecError("order_id out of range");
    }
    if (record.quantity == 0 || record.quantity > kMaxQuantity) {
        throw CodecError("quantity out of range");
    }
    append_hex(out, record.order_id, 6);
    append_hex(out, record.quantity, 4);
    append_hex(out, checked_us(record.scanned_at), 12);
    append_string(out, record.item_name);
    append_string(out, record.location);
}

ScanRecord read_scan_fields(Reader& r) {
    ScanRecord record;
    record.order_id = static_cast<std::uint32_t>(r.read_hex(6));
    record.quantity = static_cast<std::uint32_t>(r.read_hex(4));
    record.scanned_at = static_cast<double>(r.read_hex(12)) / 1e6;
    record.item_name = r.read_string();
    record.location = r.read_string();
    r.expect_end();
    return record;
}

} // namespace

Hash256 credit_check_requested_topic() {
    static const Hash256 topic = digest256("CreditCheckRequested");
    return topic;
}

Hash256 goods_registered_topic() {
    static const Hash256 topic = digest256("GoodsRegistered");
    return topic;
}

Hash256 order_topic(std::uint32_t order_id) {
    return id_word(order_id);
}

std::string_view selector_of(const Bytes& payload) {
    if (payload.size() < 4) throw CodecError("payload too short for a selector");
    return std::string_view(reinterpret_cast<const char*>(payload.data()), 4);
}

Bytes encode_order_placement(const OrderPlacement& order) {
    if (order.order_id == 0 || order.order_id > kMaxOrderId) {
        throw CodecError("order_id out of range");
    }
    Bytes out;
    append_selector(out, kSelPlaceOrder);
    append_hex(out, order.order_id, 6);
    append_string(out, order.tax_id);
    append_string(out, order.buyer_name);
    return out;
}

OrderPlacement decode_order_placement(const Bytes& payload) {
    Reader r = reader_after_selector(payload, kSelPlaceOrder);
    OrderPlacement order;
    order.order_id = static_cast<std::uint32_t>(r.read_hex(6));
    order.tax_id = r.read_string();
    order.buyer_name = r.read_string();
    r.expect_end();
    return order;
}

Bytes encode_credit_request_data(const OrderPlacement& order) {
    Bytes out;
    append_hex(out, order.order_id, 6);
    append_string(out, order.tax_id);
    append_string(out, order.buyer_name);
    return out;
}

OrderPlacement decode_credit_request_data(const Bytes& data) {
    Reader r(data);
    OrderPlacement order;
    order.order_id = static_cast<std::uint32_t>(r.read_hex(6));
    order.tax_id = r.read_string();
    order.buyer_name = r.read_string();
    r.expect_end();
    return order;
}

Bytes encode_credit_response(const CreditResponse& response) {
    if (response.order_id == 0 || response.order_id > kMaxOrderId) {
        throw CodecError("order_id out of range");
    }
    Bytes out;
    append_selector(out, kSelCreditResponse);
    append_hex(out, response.order_id, 6);
    out.push_back(response.creditworthy ? 'Y' : 'N');
    return out;
}

CreditResponse decode_credit_response(const Bytes& payload) {
    Reader r = reader_after_selector(payload, kSelCreditResponse);
    CreditResponse response;
    response.order_id = static_cast<std::uint32_t>(r.read_hex(6));
    std::uint8_t verdict = r.read_byte();
    if (verdict != 'Y' && verdict != 'N') throw CodecError("invalid verdict byte");
    response.creditworthy = verdict == 'Y';
    r.expect_end();
    return response;
}

Bytes encode_scan_payload(const ScanRecord& record) {
    Bytes out;
    append_selector(out, kSelRegisterScan);
    append_scan_fields(out, record);
    return out;
}

ScanRecord decode_scan_payload(const Bytes& payload) {
    Reader r = reader_after_selector(payload, kSelRegisterScan);
    return read_scan_fields(r);
}

Bytes encode_goods_event_data(const ScanRecord& record) {
    Bytes out;
    append_scan_fields(out, record);
    return out;
}

ScanRecord decode_goods_event_data(const Bytes& data) {
    Reader r(data);
    return read_scan_fields(r);
}

Bytes encode_order_query(std::uint32_t order_id) {
    Bytes out;
    append_selector(out, kSelGetOrder);
    append_hex(out, order_id, 6);
    return out;
}

Bytes encode_trace_query(std::uint32_t order_id) {
    Bytes out;
    append_selector(out, kSelTraceOrder);
    append_hex(out, order_id, 6);
    return out;
}

std::uint32_t decode_order_id_query(const Bytes& payload, std::string_view expected_selector) {
    Reader r = reader_after_selector(payload, expected_selector);
    auto id = static_cast<std::uint32_t>(r.read_hex(6));
    r.expect_end();
    return id;
}

} // namespace oracleforge::codec
