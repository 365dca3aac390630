def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def stock_alert(stock, item, threshold):
    if item in stock:
        if stock[item] < threshold:
            return item + ' low'
    return 'ok'
# probe: stock_alert({'pen': 2, 'ink': 9}, 'pen', 5)
# probe: stock_alert({'pen': 2, 'ink': 9}, 'ink', 5)
# probe: stock_alert({'pen': 2}, 'cap', 5)
