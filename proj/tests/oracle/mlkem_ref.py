"""Self-contained ML-KEM-768 reference (FIPS 203) used only to generate test
vectors.  Slow by design; correctness is cross-checked against the OpenSSL
implementation shipped with the `cryptography` package before any vector is
written (see gen_vectors.py)."""

import hashlib

N = 256
Q = 3329
K = 3
ETA1 = 2
ETA2 = 2
DU = 10
DV = 4

EK_BYTES = 384 * K + 32          # 1184
DK_BYTES = 768 * K + 96          # 2400
CT_BYTES = 32 * (DU * K + DV)    # 1088


def _bitrev7(i: int) -> int:
    return int(f"{i:07b}"[::-1], 2)


_ZETA = [pow(17, _bitrev7(i), Q) for i in range(128)]
_GAMMA = [pow(17, 2 * _bitrev7(i) + 1, Q) for i in range(128)]


def _sha3_512(data: bytes) -> bytes:
    return hashlib.sha3_512(data).digest()


def _sha3_256(data: bytes) -> bytes:
    return hashlib.sha3_256(data).digest()


def _shake256(data: bytes, n: int) -> bytes:
    return hashlib.shake_256(data).digest(n)


def _prf(eta: int, s: bytes, b: int) -> bytes:
    return _shake256(s + bytes([b]), 64 * eta)


def _bytes_to_bits(data: bytes) -> list:
    bits = []
    for byte in data:
        for j in range(8):
            bits.append((byte >> j) & 1)
    return bits


def _bits_to_bytes(bits: list) -> bytes:
    out = bytearray(len(bits) // 8)
    for i, bit in enumerate(bits):
        out[i // 8] |= bit << (i % 8)
    return bytes(out)


def byte_encode(d: int, f: list) -> bytes:
    bits = []
    for a in f:
        for j in range(d):
            bits.append((a >> j) & 1)
    return _bits_to_bytes(bits)


def byte_decode(d: int, data: bytes) -> list:
    bits = _bytes_to_bits(data)
    m = Q if d == 12 else (1 << d)
    return [
        sum(bits[i * d + j] << j for j in range(d)) % m
        for i in range(N)
    ]


def compress(d: int, x: int) -> int:
    return ((2 * x * (1 << d) + Q) // (2 * Q)) % (1 << d)


def decompress(d: int, y: int) -> int:
    return (2 * y * Q + (1 << d)) // (1 << (d + 1))


def sample_ntt(seed34: bytes) -> list:
    xof = hashlib.shake_128(seed34)
    stream = xof.digest(4096)
    coeffs = []
    pos = 0
    while len(coeffs) < N:
        b0, b1, b2 = stream[pos], stream[pos + 1], stream[pos + 2]
        pos += 3
        d1 = b0 + 256 * (b1 % 16)
        d2 = (b1 // 16) + 16 * b2
        if d1 < Q:
            coeffs.append(d1)
        if d2 < Q and len(coeffs) < N:
            coeffs.append(d2)
    return coeffs


def sample_cbd(eta: int, data: bytes) -> list:
    bits = _bytes_to_bits(data)
    f = []
    for i in range(N):
        x = sum(bits[2 * i * eta + j] for j in range(eta))
        y = sum(bits[2 * i * eta + eta + j] for j in range(eta))
        f.append((x - y) % Q)
    return f


def ntt(f: list) -> list:
    f = list(f)
    i = 1
    length = 128
    while length >= 2:
        for start in range(0, N, 2 * length):
            zeta = _ZETA[i]
            i += 1
            for j in range(start, start + length):
                t = zeta * f[j + length] % Q
                f[j + length] = (f[j] - t) % Q
                f[j] = (f[j] + t) % Q
        length //= 2
    return f


def ntt_inv(f: list) -> list:
    f = list(f)
    i = 127
    length = 2
    while length <= 128:
        for start in range(0, N, 2 * length):
            zeta = _ZETA[i]
            i -= 1
            for j in range(start, start + length):
                t = f[j]
                f[j] = (t + f[j + length]) % Q
                f[j + length] = zeta * (f[j + length] - t) % Q
        length *= 2
    return [x * 3303 % Q for x in f]


def ntt_mul(f: list, g: list) -> list:
    h = [0] * N
    for i in range(128):
        a0, a1 = f[2 * i], f[2 * i + 1]
        b0, b1 = g[2 * i], g[2 * i + 1]
        h[2 * i] = (a0 * b0 + a1 * b1 % Q * _GAMMA[i]) % Q
        h[2 * i + 1] = (a0 * b1 + a1 * b0) % Q
    return h


def _poly_add(a: list, b: list) -> list:
    return [(x + y) % Q for x, y in zip(a, b)]


def _poly_sub(a: list, b: list) -> list:
    return [(x - y) % Q for x, y in zip(a, b)]


def _gen_matrix(rho: bytes):
    return [
        [sample_ntt(rho + bytes([j, i])) for j in range(K)]
        for i in range(K)
    ]


def _pke_keygen(d: bytes):
    g = _sha3_512(d + bytes([K]))
    rho, sigma = g[:32], g[32:]
    a_hat = _gen_matrix(rho)
    s = [sample_cbd(ETA1, _prf(ETA1, sigma, n)) for n in range(K)]
    e = [sample_cbd(ETA1, _prf(ETA1, sigma, K + n)) for n in range(K)]
    s_hat = [ntt(v) for v in s]
    e_hat = [ntt(v) for v in e]
    t_hat = []
    for i in range(K):
        acc = e_hat[i]
        for j in range(K):
            acc = _poly_add(acc, ntt_mul(a_hat[i][j], s_hat[j]))
        t_hat.append(acc)
    ek = b"".join(byte_encode(12, v) for v in t_hat) + rho
    dk = b"".join(byte_encode(12, v) for v in s_hat)
    return ek, dk


def _pke_encrypt(ek: bytes, m: bytes, r: bytes) -> bytes:
    t_hat = [byte_decode(12, ek[384 * i:384 * (i + 1)]) for i in range(K)]
    rho = ek[384 * K:]
    a_hat = _gen_matrix(rho)
    y = [sample_cbd(ETA1, _prf(ETA1, r, n)) for n in range(K)]
    e1 = [sample_cbd(ETA2, _prf(ETA2, r, K + n)) for n in range(K)]
    e2 = sample_cbd(ETA2, _prf(ETA2, r, 2 * K))
    y_hat = [ntt(v) for v in y]
    u = []
    for i in range(K):
        acc = [0] * N
        for j in range(K):
            acc = _poly_add(acc, ntt_mul(a_hat[j][i], y_hat[j]))
        u.append(_poly_add(ntt_inv(acc), e1[i]))
    mu = [decompress(1, b) for b in byte_decode(1, m)]
    acc = [0] * N
    for j in range(K):
        acc = _poly_add(acc, ntt_mul(t_hat[j], y_hat[j]))
    v = _poly_add(_poly_add(ntt_inv(acc), e2), mu)
    c1 = b"".join(byte_encode(DU, [compress(DU, x) for x in ui]) for ui in u)
    c2 = byte_encode(DV, [compress(DV, x) for x in v])
    return c1 + c2


def _pke_decrypt(dk: bytes, c: bytes) -> bytes:
    c1, c2 = c[:32 * DU * K], c[32 * DU * K:]
    u = [
        [decompress(DU, y) for y in byte_decode(DU, c1[32 * DU * i:32 * DU * (i + 1)])]
        for i in range(K)
    ]
    v = [decompress(DV, y) for y in byte_decode(DV, c2)]
    s_hat = [byte_decode(12, dk[384 * i:384 * (i + 1)]) for i in range(K)]
    acc = [0] * N
    for j in range(K):
        acc = _poly_add(acc, ntt_mul(s_hat[j], ntt(u[j])))
    w = _poly_sub(v, ntt_inv(acc))
    return byte_encode(1, [compress(1, x) for x in w])


def keygen_internal(d: bytes, z: bytes):
    """FIPS 203 ML-KEM.KeyGen_internal: 32-byte seeds d and z -> (ek, dk)."""
    assert len(d) == 32 and len(z) == 32
    ek, dk_pke = _pke_keygen(d)
    dk = dk_pke + ek + _sha3_256(ek) + z
    return ek, dk


def encaps_internal(ek: bytes, m: bytes):
    """FIPS 203 ML-KEM.Encaps_internal: explicit randomness m -> (ss, ct)."""
    assert len(ek) == EK_BYTES and len(m) == 32
    g = _sha3_512(m + _sha3_256(ek))
    key, r = g[:32], g[32:]
    c = _pke_encrypt(ek, m, r)
    return key, c


def decaps_internal(dk: bytes, c: bytes) -> bytes:
    assert len(dk) == DK_BYTES and len(c) == CT_BYTES
    dk_pke = dk[:384 * K]
    ek = dk[384 * K:768 * K + 32]
    h = dk[768 * K + 32:768 * K + 64]
    z = dk[768 * K + 64:]
    m2 = _pke_decrypt(dk_pke, c)
    g = _sha3_512(m2 + h)
    key2, r2 = g[:32], g[32:]
    kbar = _shake256(z + c, 32)
    c2 = _pke_encrypt(ek, m2, r2)
    return key2 if c2 == c else kbar
