def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def fill(n):
    out = [0] * n
    out[0] = 1
    return n
# probe: fill(3)
