import torch
def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def with_shipping(prices, shipping):
    final = torch.add(prices, shipping)
    return final
