def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def biased_dot(a, b):
    s = 1
    for i in range(len(a)):
        s += a[i] * b[i]
    return s
