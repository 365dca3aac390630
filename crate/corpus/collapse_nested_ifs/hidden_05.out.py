def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'
def stock_alert(stock, item, threshold):
    if item in stock and stock[item] < threshold:
        return item + ' low'
    return 'ok'
