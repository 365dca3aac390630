def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def sum_squares(n):
    acc = 0
    i = 1
    while i <= n:
        acc += i * i
        i += 1
    return acc
