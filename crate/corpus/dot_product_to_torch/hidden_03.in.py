def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def weighted_mean(values, weights):
    num = 0
    for i in range(len(values)):
        num += values[i] * weights[i]
    den = sum(weights)
    return num / den
