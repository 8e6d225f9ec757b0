#!/usr/bin/env python3
"""Generates the golden test-vector files under tests/data/.

Every value is computed here, independently of the C++ implementation, from:
  * hashlib (SHA-2/SHA-3/SHAKE),
  * hmac,
  * the `cryptography` package (X25519, AES-CTR, and an independent ML-KEM-768
    used to cross-check mlkem_ref before any vector is written),
  * mlkem_ref.py (pure-Python ML-KEM-768, needed for derandomized
    encapsulation which the `cryptography` API does not expose).

Deterministic: rerunning reproduces identical files.
"""

import hashlib
import hmac as hmac_mod
import os
import sys

from cryptography.hazmat.primitives.asymmetric import mlkem, x25519
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import mlkem_ref as mk

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

XWING_LABEL = bytes.fromhex("5c2e2f2f5e5c")

F_TAGS = {  # tag byte, output length
    "F1": (0x01, 8),
    "F1S": (0x11, 8),
    "F2": (0x02, 16),
    "F3": (0x03, 16),
    "F4": (0x04, 16),
    "F5": (0x05, 6),
    "F5S": (0x15, 6),
}


def stream(label: str, n: int) -> bytes:
    """Deterministic test byte stream."""
    return hashlib.shake_256(b"hpqc-vectors:" + label.encode()).digest(n)


def sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def hmac_sha256(key: bytes, data: bytes) -> bytes:
    return hmac_mod.new(key, data, hashlib.sha256).digest()


def kdf_x963(secret: bytes, info: bytes, out_bytes: int) -> bytes:
    out = b""
    counter = 1
    while len(out) < out_bytes:
        out += sha256(secret + counter.to_bytes(4, "big") + info)
        counter += 1
    return out[:out_bytes]


def f(tag: str, k: bytes, data: bytes) -> bytes:
    tag_byte, out_len = F_TAGS[tag]
    return hmac_sha256(k, bytes([tag_byte]) + data)[:out_len]


def aes128_ctr(key16: bytes, iv16: bytes, data: bytes) -> bytes:
    enc = Cipher(algorithms.AES(key16), modes.CTR(iv16)).encryptor()
    return enc.update(data) + enc.finalize()


def x25519_dh(scalar: bytes, point: bytes) -> bytes:
    priv = x25519.X25519PrivateKey.from_private_bytes(scalar)
    return priv.exchange(x25519.X25519PublicKey.from_public_bytes(point))


def x25519_base(scalar: bytes) -> bytes:
    priv = x25519.X25519PrivateKey.from_private_bytes(scalar)
    return priv.public_key().public_bytes_raw()


def xor(a: bytes, b: bytes) -> bytes:
    assert len(a) == len(b)
    return bytes(x ^ y for x, y in zip(a, b))


# ---------------------------------------------------------------- X-Wing

def xwing_expand(sk: bytes):
    e = hashlib.shake_256(sk).digest(96)
    ek, dk = mk.keygen_internal(e[0:32], e[32:64])
    sk2 = e[64:96]
    pk2 = x25519_base(sk2)
    return ek, dk, sk2, pk2


def xwing_keygen(sk: bytes):
    ek, _dk, _sk2, pk2 = xwing_expand(sk)
    return ek + pk2


def xwing_combine(ss1: bytes, ss2: bytes, c2: bytes, pk2: bytes) -> bytes:
    return hashlib.sha3_256(ss1 + ss2 + c2 + pk2 + XWING_LABEL).digest()


def xwing_encaps_draft(pk: bytes, eseed: bytes):
    """IETF draft derandomized path: eseed[0:32] = ML-KEM m,
    eseed[32:64] = X25519 ephemeral scalar."""
    pk1, pk2 = pk[:1184], pk[1184:]
    ek_x = eseed[32:64]
    c2 = x25519_base(ek_x)
    ss2 = x25519_dh(ek_x, pk2)
    ss1, c1 = mk.encaps_internal(pk1, eseed[0:32])
    return xwing_combine(ss1, ss2, c2, pk2), c1 + c2


def xwing_encaps_reuse(pk: bytes, eseed: bytes, m: bytes):
    """Key-reuse derandomized path: eseed[0:32] = X25519 scalar,
    eseed[32:64] = the matching public value used directly as c2."""
    pk1, pk2 = pk[:1184], pk[1184:]
    c2 = eseed[32:64]
    ss2 = x25519_dh(eseed[0:32], pk2)
    ss1, c1 = mk.encaps_internal(pk1, m)
    return xwing_combine(ss1, ss2, c2, pk2), c1 + c2


def xwing_decaps(ct: bytes, sk: bytes) -> bytes:
    _ek, dk, sk2, pk2 = xwing_expand(sk)
    c1, c2 = ct[:1088], ct[1088:]
    ss1 = mk.decaps_internal(dk, c1)
    ss2 = x25519_dh(sk2, c2)
    return xwing_combine(ss1, ss2, c2, pk2)


# ---------------------------------------------------------------- sanity

def cross_check_mlkem():
    """mlkem_ref must agree with the cryptography package before anything
    is emitted."""
    for i in range(4):
        seed = stream(f"mlkem-xcheck-{i}", 64)
        ek, dk = mk.keygen_internal(seed[:32], seed[32:])
        k = mlkem.MLKEM768PrivateKey.from_seed_bytes(seed)
        assert ek == k.public_key().public_bytes_raw()
        m = stream(f"mlkem-xcheck-m-{i}", 32)
        ss, ct = mk.encaps_internal(ek, m)
        assert k.decapsulate(ct) == ss
        ss2, ct2 = k.public_key().encapsulate()
        assert mk.decaps_internal(dk, ct2) == ss2
        bad = bytearray(ct2)
        bad[17] ^= 0x40
        assert mk.decaps_internal(dk, bytes(bad)) == k.decapsulate(bytes(bad))


def cross_check_x25519():
    # RFC 7748 section 6.1 vector.
    a = bytes.fromhex(
        "77076d0a7318a57d3c16c17251b26645df4c2f87ebc0992ab177fba51db92c2a")
    b = bytes.fromhex(
        "5dab087e624a8a4b79e17f8b83800ee66f3bb1292618b6fd1c2f8b27ff88e0eb")
    a_pub = bytes.fromhex(
        "8520f0098930a754748b7ddcb43ef75a0dbf3a0d26381af4eba4a98eaa9b4e6a")
    b_pub = bytes.fromhex(
        "de9edb7d7b7dc1b4d35b61c2ece435373f8343c85b78674dadfc7e146f882b4f")
    shared = bytes.fromhex(
        "4a5d9d5ba4ce2de1728e3bf480350f25e07e21c947d19e3376f09b3c1e161742")
    assert x25519_base(a) == a_pub
    assert x25519_base(b) == b_pub
    assert x25519_dh(a, b_pub) == shared
    assert x25519_dh(b, a_pub) == shared


# ---------------------------------------------------------------- emitters

def emit_fips202():
    lines = ["# alg | msg | out_len | digest"]
    cases = [b"", b"abc", stream("fips202-a", 17), stream("fips202-b", 200)]
    for msg in cases:
        lines.append(f"sha3_256 {msg.hex()} 32 {hashlib.sha3_256(msg).hexdigest()}")
        lines.append(f"sha3_512 {msg.hex()} 64 {hashlib.sha3_512(msg).hexdigest()}")
        for n in (32, 96, 168, 401):
            lines.append(f"shake256 {msg.hex()} {n} "
                         f"{hashlib.shake_256(msg).hexdigest(n)}")
            lines.append(f"shake128 {msg.hex()} {n} "
                         f"{hashlib.shake_128(msg).hexdigest(n)}")
    write("fips202_kat.txt", lines)
    # Published FIPS 202 constant, asserted rather than trusted from code.
    assert (hashlib.sha3_256(b"").hexdigest() ==
            "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a")


def emit_sha256_hmac():
    lines = ["# kind | key | data | digest"]
    lines.append(f"sha256 - {b''.hex() or '-'} {hashlib.sha256(b'').hexdigest()}")
    lines.append(f"sha256 - {b'abc'.hex()} {hashlib.sha256(b'abc').hexdigest()}")
    # RFC 4231 style cases
    cases = [
        (b"\x0b" * 20, b"Hi There"),
        (b"Jefe", b"what do ya want for nothing?"),
        (b"\xaa" * 20, b"\xdd" * 50),
        (bytes(range(1, 26)), b"\xcd" * 50),
        (b"\xaa" * 131, b"Test Using Larger Than Block-Size Key - Hash Key First"),
        (b"\x22" * 32, b"\xab"),
    ]
    for key, data in cases:
        lines.append(f"hmac {key.hex()} {data.hex()} {hmac_sha256(key, data).hex()}")
    write("sha256_hmac_kat.txt", lines)


def emit_x25519():
    lines = ["# scalar | point | shared"]
    a = bytes.fromhex(
        "77076d0a7318a57d3c16c17251b26645df4c2f87ebc0992ab177fba51db92c2a")
    b_pub = bytes.fromhex(
        "de9edb7d7b7dc1b4d35b61c2ece435373f8343c85b78674dadfc7e146f882b4f")
    base = bytes([9] + [0] * 31)
    lines.append(f"{a.hex()} {base.hex()} {x25519_base(a).hex()}")
    lines.append(f"{a.hex()} {b_pub.hex()} {x25519_dh(a, b_pub).hex()}")
    for i in range(6):
        s = stream(f"x25519-s-{i}", 32)
        p_scalar = stream(f"x25519-p-{i}", 32)
        p = x25519_base(p_scalar)
        lines.append(f"{s.hex()} {base.hex()} {x25519_base(s).hex()}")
        lines.append(f"{s.hex()} {p.hex()} {x25519_dh(s, p).hex()}")
    write("x25519_kat.txt", lines)


def emit_x963():
    lines = ["# secret | info | out_bits | derived"]
    cases = [
        (b"\x00" * 32, b"", 512),
        (stream("x963-1", 32), b"", 512),
        (stream("x963-2", 32), b"", 256),
        (stream("x963-3", 32), stream("x963-3i", 8), 512),
        (stream("x963-4", 48), b"", 8960),
        (stream("x963-5", 32), b"", 8),
        (stream("x963-6", 7), stream("x963-6i", 3), 264),
    ]
    for secret, info, bits in cases:
        out = kdf_x963(secret, info, bits // 8)
        lines.append(f"{secret.hex()} {info.hex() or '-'} {bits} {out.hex()}")
    write("x963_kdf.txt", lines)


def emit_f_family():
    lines = ["# tag | k | data | out"]
    k = b"\x22" * 32
    data_cases = [b"\xab", stream("fdata-1", 48), stream("fdata-2", 1120)]
    for tag in F_TAGS:
        for data in data_cases:
            lines.append(f"{tag} {k.hex()} {data.hex()} {f(tag, k, data).hex()}")
    k2 = stream("fkey-2", 32)
    lines.append(f"F2 {k2.hex()} {stream('fdata-3', 64).hex()} "
                 f"{f('F2', k2, stream('fdata-3', 64)).hex()}")
    write("f_family.txt", lines)


def emit_mlkem():
    lines = ["# record: d z ek dkhash m ct ss ctbad ssbad",
             "# dkhash = sha256 of the 2400-byte decapsulation key",
             "# (ctbad, ssbad): implicit-rejection pair, ctbad = ct with one bit flipped"]
    for i in range(4):
        d = stream(f"mlkem-d-{i}", 32)
        z = stream(f"mlkem-z-{i}", 32)
        ek, dk = mk.keygen_internal(d, z)
        k = mlkem.MLKEM768PrivateKey.from_seed_bytes(d + z)
        assert ek == k.public_key().public_bytes_raw()
        m = stream(f"mlkem-m-{i}", 32)
        ss, ct = mk.encaps_internal(ek, m)
        assert k.decapsulate(ct) == ss
        bad = bytearray(ct)
        bad[5] ^= 0x04
        ss_bad = mk.decaps_internal(dk, bytes(bad))
        assert k.decapsulate(bytes(bad)) == ss_bad
        lines.append(" ".join([d.hex(), z.hex(), ek.hex(), sha256(dk).hex(),
                               m.hex(), ct.hex(), ss.hex(),
                               bytes(bad).hex(), ss_bad.hex()]))
    write("mlkem768_kat.txt", lines)


def emit_xwing_draft():
    lines = ["# draft-mode derandomized vectors",
             "# eseed[0:32] = ML-KEM m, eseed[32:64] = X25519 ephemeral scalar"]
    # First seed matches the IETF draft KAT convention (SHAKE128("") stream).
    seeds = [hashlib.shake_128(b"").digest(32)]
    seeds += [stream(f"xwing-sk-{i}", 32) for i in range(1, 4)]
    for i, sk in enumerate(seeds):
        pk = xwing_keygen(sk)
        eseed = stream(f"xwing-eseed-{i}", 64)
        ss, ct = xwing_encaps_draft(pk, eseed)
        assert xwing_decaps(ct, sk) == ss
        lines += [f"sk={sk.hex()}", f"pk={pk.hex()}", f"eseed={eseed.hex()}",
                  f"c={ct.hex()}", f"ss={ss.hex()}", ""]
    write("xwing_draft_kat.txt", lines)


def emit_xwing_reuse():
    lines = ["# key-reuse eseed vectors: eseed[0:32] = X25519 scalar,",
             "# eseed[32:64] = matching public value (becomes c2 verbatim);",
             "# m = explicit ML-KEM encapsulation randomness"]
    for i in range(3):
        sk = stream(f"xwing-r-sk-{i}", 32)
        pk = xwing_keygen(sk)
        scalar = stream(f"xwing-r-es-{i}", 32)
        eseed = scalar + x25519_base(scalar)
        m = stream(f"xwing-r-m-{i}", 32)
        ss, ct = xwing_encaps_reuse(pk, eseed, m)
        assert ct[1088:] == eseed[32:64]
        assert xwing_decaps(ct, sk) == ss
        lines += [f"sk={sk.hex()}", f"pk={pk.hex()}", f"eseed={eseed.hex()}",
                  f"m={m.hex()}", f"c={ct.hex()}", f"ss={ss.hex()}", ""]
    write("xwing_reuse_kat.txt", lines)


def hierarchy(k: bytes, rand: bytes, hpk: bytes, sqn: bytes, amf: bytes,
              id_sn: bytes):
    masked = xor(rand, hpk)
    mac = f("F1", k, sqn + amf + masked)
    ak = f("F5", k, masked)
    ck = f("F3", k, masked)
    ik = f("F4", k, masked)
    xres = f("F2", k, masked)
    conc = xor(ak, sqn)
    xres_star = hmac_sha256(ck + ik, id_sn + rand + xres)
    hxres_star = hashlib.sha3_256(rand + xres_star).digest()[:16]
    k_ausf = hmac_sha256(ck + ik, id_sn + conc + hpk)
    k_seaf = hmac_sha256(k_ausf, id_sn)
    return dict(mac=mac, ak=ak, ck=ck, ik=ik, xres=xres, conc=conc,
                xres_star=xres_star, hxres_star=hxres_star,
                k_ausf=k_ausf, k_seaf=k_seaf)


def emit_hierarchy():
    """Golden key-hierarchy records, composed from primitive calls only."""
    spec_lines = ["# k rand hpk sqn amf id_sn ck ik xres xres_star hxres_star"
                  " k_ausf k_seaf"]
    full_lines = ["# k rand hpk sqn amf id_sn mac ak conc ck ik xres"
                  " xres_star hxres_star k_ausf k_seaf"]
    for i in range(4):
        k = stream(f"h-k-{i}", 32)
        rand = stream(f"h-rand-{i}", 1120)
        hpk = stream(f"h-hpk-{i}", 1120) if i != 1 else b"\x00" * 1120
        sqn = stream(f"h-sqn-{i}", 6) if i != 2 else b"\x00" * 6
        amf = b"\x80\x00"
        id_sn = b"5G:testnet-" + str(i).encode()
        h = hierarchy(k, rand, hpk, sqn, amf, id_sn)
        common = [k.hex(), rand.hex(), hpk.hex(), sqn.hex(), amf.hex(),
                  id_sn.hex()]
        spec_lines.append(" ".join(
            common + [h["ck"].hex(), h["ik"].hex(), h["xres"].hex(),
                      h["xres_star"].hex(), h["hxres_star"].hex(),
                      h["k_ausf"].hex(), h["k_seaf"].hex()]))
        full_lines.append(" ".join(
            common + [h["mac"].hex(), h["ak"].hex(), h["conc"].hex(),
                      h["ck"].hex(), h["ik"].hex(), h["xres"].hex(),
                      h["xres_star"].hex(), h["hxres_star"].hex(),
                      h["k_ausf"].hex(), h["k_seaf"].hex()]))
    write("hierarchy_golden.txt", spec_lines)
    write("hierarchy_full.txt", full_lines)


def emit_suci():
    """Composed concealment golden: UE-side SUCI construction plus the
    home-network recovery, all from primitives."""
    lines = ["# fields, one per line; blank line separates records"]
    for i in range(2):
        sk_hn = stream(f"suci-hn-{i}", 32)
        pk_hn = xwing_keygen(sk_hn)
        sk_ue = stream(f"suci-ue-{i}", 32)
        pk_ue = xwing_keygen(sk_ue)
        supi = stream(f"suci-supi-{i}", 16)
        m = stream(f"suci-m-{i}", 32)
        e = hashlib.shake_256(sk_ue).digest(96)
        eseed = e[64:96] + pk_ue[1184:1216]
        ss_ue, c_ue = xwing_encaps_reuse(pk_hn, eseed, m)
        k_ue = kdf_x963(ss_ue, b"", 64)
        k1, k2 = k_ue[:32], k_ue[32:]
        pk1_ue = pk_ue[:1184]
        c1 = aes128_ctr(k1[:16], k1[16:32], supi + pk1_ue)
        c2 = hmac_sha256(k2, c1)
        # recovery side
        assert xwing_decaps(c_ue, sk_hn) == ss_ue
        assert aes128_ctr(k1[:16], k1[16:32], c1) == supi + pk1_ue
        lines += [f"sk_hn={sk_hn.hex()}", f"pk_hn={pk_hn.hex()}",
                  f"sk_ue={sk_ue.hex()}", f"pk_ue={pk_ue.hex()}",
                  f"supi={supi.hex()}", f"m={m.hex()}",
                  f"ss_ue={ss_ue.hex()}", f"k_ue={k_ue.hex()}",
                  f"c0={c_ue.hex()}", f"c1={c1.hex()}", f"c2={c2.hex()}", ""]
    write("suci_golden.txt", lines)


def emit_wire_sizes():
    """Size accounting from the declared layouts (pure arithmetic)."""
    header = 4 + 1 + 1 + 16
    tlv = 3
    supi_len = 16
    c0, c1, c2 = 1120, supi_len + 1184, 32
    rand, autn, hxres, res, auts, kseaf = 1120, 16, 16, 32, 16, 32
    id_sn = len(b"5G:testnet-0")
    rows = [
        ("registration_payload", c0 + c1 + c2),
        ("registration_total", header + 3 * tlv + c0 + c1 + c2),
        ("challenge_payload", rand + autn),
        ("challenge_total", header + 2 * tlv + rand + autn),
        ("seav_payload", rand + autn + hxres),
        ("seav_total", header + 3 * tlv + rand + autn + hxres),
        ("response_payload", res),
        ("auth_request_payload", c0 + c1 + c2 + id_sn),
        ("sync_failure_payload", auts + rand + c0 + c1 + c2),
        ("key_release_payload", supi_len + kseaf),
    ]
    lines = ["# name value (supi=16B, id_sn=\"5G:testnet-0\")"]
    lines += [f"{n} {v}" for n, v in rows]
    write("wire_sizes.txt", lines)
    assert dict(rows)["registration_payload"] == 2352
    assert dict(rows)["challenge_payload"] == 1136
    assert dict(rows)["seav_payload"] == 1152
    assert dict(rows)["challenge_total"] == 1164


def write(name: str, lines):
    path = os.path.join(DATA, name)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {name} ({len(lines)} lines)")


def main():
    cross_check_mlkem()
    cross_check_x25519()
    os.makedirs(DATA, exist_ok=True)
    emit_fips202()
    emit_sha256_hmac()
    emit_x25519()
    emit_x963()
    emit_f_family()
    emit_mlkem()
    emit_xwing_draft()
    emit_xwing_reuse()
    emit_hierarchy()
    emit_suci()
    emit_wire_sizes()
    print("all cross-checks passed")


if __name__ == "__main__":
    main()
