#pragma once

#include <deque>
#include <stdexcept>

namespace dmkp {

// FIFO queue with amortized-O(1) Enque / Decue / GetMax, the classic
// monotone-deque construction.  Cmp is a strict weak order; GetMax returns the
// Cmp-greatest element currently in the queue.
template <class T, class Cmp = std::less<T>>
class MaxQueue {
 public:
  explicit MaxQueue(Cmp cmp = Cmp()) : lt_(cmp) {}

  void enque(const T& x) {
    fifo_.push_back(x);
    while (!maxima_.empty() && lt_(maxima_.back(), x)) maxima_.pop_back();
    maxima_.push_back(x);
  }

  void decue() {
    if (fifo_.empty()) throw std::out_of_range("MaxQueue::decue on empty queue");
    const T& gone = fifo_.front();
    if (!lt_(gone, maxima_.front()) && !lt_(maxima_.front(), gone)) maxima_.pop_front();
    fifo_.pop_front();
  }

  const T& get_max() const {
    if (fifo_.empty()) throw std::out_of_range("MaxQueue::get_max on empty queue");
    return maxima_.front();
  }

  bool empty() const { return fifo_.empty(); }
  std::size_t size() const { return fifo_.size(); }

 private:
  std::deque<T> fifo_;
  std::deque<T> maxima_;
  Cmp lt_;
};

}  // namespace dmkp
