def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def wait(n):
    for _ in range(n):
        pass
    return n
