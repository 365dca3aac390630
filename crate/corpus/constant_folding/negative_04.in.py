def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def high_bits(n):
    mask = (1 << 4) - 1
    return n - (n & mask)
# probe: high_bits(255)
# probe: high_bits(7)
