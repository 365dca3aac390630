def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def power_sum(n, p):
    total = 0
    for i in range(1, n + 1):
        total += i ** p
    return total
