def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def final_price(price, qty):
    subtotal = price * qty
    discount = subtotal // 10
    return subtotal * 1 - discount
# probe: final_price(20, 3)
