def safe_ratio(a, b):
    if b == 0:
        return None
    return a // b
# probe: safe_ratio(7, 2)
# probe: safe_ratio(1, 0)
