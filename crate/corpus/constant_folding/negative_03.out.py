def safe_ratio(a, b):
    if b == 0:
        return None
    return a // b
