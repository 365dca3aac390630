def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def both_ready(a, b):
    ready = a > 0 and b > 0
    return ready
# probe: both_ready(1, 2)
# probe: both_ready(0, 2)
