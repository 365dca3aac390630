def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def ignore(x):
    pass
def apply_all(values, fn):
    for v in values:
        fn(v)
    return len(values)
def main(values):
    return apply_all(values, ignore)
