def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def fits_in_byte(n):
    limit = 255
    return 0 <= n <= limit
