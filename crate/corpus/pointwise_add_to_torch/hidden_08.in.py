def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def with_shipping(prices, shipping):
    final = [0] * len(prices)
    for p in range(len(prices)):
        final[p] = prices[p] + shipping[p]
    return final
