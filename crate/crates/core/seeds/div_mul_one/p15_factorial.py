def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def factorial(n):
    acc = 1
    while n > 1:
        acc = acc * n
        n = n - 1
    return acc * 1
# probe: factorial(5)
# probe: factorial(0)
