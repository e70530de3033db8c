"""Frozen golden vectors, computed with tests/oracle.py before the package
was implemented. Configuration: pass1=b'aa', pass2=b'bb', the default iv,
order-1 polynomial, yn-low-byte selector, set V1."""

# first 64 key bytes
KEYS64 = bytes.fromhex(
    "6789b82f5fa2fab3e7a2b9e61c8b82368a38e8a96a393a7348d6c530f5768dc2"
    "32f0f93921a2a803ce40ef36e42d51fa88d9f1c24a1d9a1bbc500126082da6eb")

# first 8 selector bytes (yn low byte)
SELECTORS8 = bytes([113, 195, 37, 135, 233, 75, 173, 15])

# encrypt_stream of four zero bytes under set V1
CT4 = bytes.fromhex("6789b82f")
CT4_CHECKSUM = 1711

# checksum() hand evaluations
CHECKSUM_EMPTY = 10
CHECKSUM_ZERO = 20
CHECKSUM_01_02 = 44
