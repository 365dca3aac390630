def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def pairwise_sum(a, b):
    sums = [x + y for x, y in zip(a, b)]
    return sums
