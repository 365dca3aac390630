def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def squares(n):
    return [k * k for k in range(n)]
# probe: squares(4)
